#ifndef HUMBERT_F2_HPP
#define HUMBERT_F2_HPP

#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// Appell F2[a, b, b'; c, c'; x, y]: series convergent for |x|+|y| < 1,
// symmetric under (b, c, x) <-> (b', c', y).
struct F2Params {
    cplx a, b, bp, c, cp;
};

enum class F2Method {
    auto_select,
    double_series,   // diagonal summation, |x|+|y| < 1
    laplace,         // half-line integral, Re(a) > 0, Re(x+y) < 1
    jaeger           // two-branch series in 1/x, |y| < 1, |x| > |y|+1
};

EvalResult f2_eval(const F2Params& p, cplx x, cplx y,
                   F2Method method = F2Method::auto_select,
                   const EvalConfig& cfg = {});

EvalResult f2_reference(const F2Params& p, cplx x, cplx y,
                        const EvalConfig& cfg = {});

// Truncated small-y expansion of F2[x/y, y] at fixed x, mirroring the
// Psi1 one with an extra (b')_l weight in the coefficients.
struct F2SmallY {
    F2Params p;
    cplx x;
    int order = 0;
    std::vector<cplx> c1, c2;
    cplx pref1, pref2;   // f_c(b,a), f_c(a,b)

    ExpansionResult at(cplx y) const;
};

F2SmallY f2_asym_small_y(const F2Params& p, cplx x, int order);

// Confluence limits relating the three functions:
//   psi1_from_f2:  F2[a, b, 1/eps; c, c'; x, eps*y]      -> Psi1
//   psi2_from_f2:  F2[a, 1/eps, 1/eps; c, c'; eps*x, eps*y] -> Psi2
//   psi2_from_psi1: Psi1[a, 1/eps; c, c'; eps*x, y]      -> Psi2
enum class ConfluenceTarget { psi1_from_f2, psi2_from_f2, psi2_from_psi1 };

struct ConfluencePair {
    EvalResult limit_side;    // finite-eps evaluation
    EvalResult target_side;   // the confluent function itself
    real abs_difference = 0;
};

ConfluencePair confluence_limit(ConfluenceTarget target, const F2Params& p,
                                cplx x, cplx y, real eps,
                                const EvalConfig& cfg = {});

} // namespace humbert

#endif
