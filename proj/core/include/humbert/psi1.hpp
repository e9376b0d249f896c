#ifndef HUMBERT_PSI1_HPP
#define HUMBERT_PSI1_HPP

#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// Psi1[a, b; c, c'; x, y]: convergent for |x| < 1, any finite y, and
// continued to x != 1, |arg(1-x)| < pi.
struct Psi1Params {
    cplx a, b, c, cp;
};

enum class Psi1Method {
    auto_select,
    double_series,     // diagonal summation of the defining double series
    f1f1_series,       // row sums: sum_k coeff_k(x) 1F1[a+k; c'; y]
    euler,             // Euler beta-kernel integral over (0, 1)
    laplace,           // Laplace integral over (0, inf)
    continuation,      // two-branch series in 1/x for |x| > 1
    bessel_integral    // Bessel-kernel half-line integral, Re x < 0
};

EvalResult psi1_eval(const Psi1Params& p, cplx x, cplx y,
                     Psi1Method method = Psi1Method::auto_select,
                     const EvalConfig& cfg = {});

// Method-agnostic best effort; equivalent to auto_select.
EvalResult psi1_reference(const Psi1Params& p, cplx x, cplx y,
                          const EvalConfig& cfg = {});

// Leading behaviour of Psi1[sign*x, y/x] as x -> 0 with y fixed:
// Gamma(c')/Gamma(a) 1F1[b; c; sign*y] (y/x)^(a-c') e^(y/x), and with
// `complete` also the algebraic branch Gamma(c')/Gamma(c'-a)
// (-y/x)^(-a).  The scale e^Re(y/x) is carried in log_scale so the
// limit regime never overflows.
struct Psi1SmallX {
    Psi1Params p;
    cplx y;           // fixed product x * (second argument)
    int sign = 1;     // first argument is sign * x
    bool complete = false;
    cplx coeff_exp;   // Gamma(c')/Gamma(a) 1F1[b; c; sign*y]
    cplx coeff_alg;   // Gamma(c')/Gamma(c'-a); complete variant only

    ExpansionResult at(cplx x) const;
};

Psi1SmallX psi1_asym_small_x(const Psi1Params& p, cplx y,
                             bool negative_x = false, bool complete = false,
                             const EvalConfig& cfg = {});

// Truncated small-y expansion of Psi1[x/y, y] at fixed x: two branches
// with prefactors f_c(b,a) (-x/y)^(-a) and f_c(a,b) (-x/y)^(-b), each
// times a polynomial sum_{m<N} a_i(m) y^m.  Coefficients depend only on
// the parameters and x, so they are precomputed once.
struct Psi1SmallY {
    Psi1Params p;
    cplx x;
    int order = 0;
    std::vector<cplx> a1, a2;   // coefficient tables, size `order`
    cplx pref1, pref2;          // f_c(b,a), f_c(a,b)

    ExpansionResult at(cplx y) const;
};

Psi1SmallY psi1_asym_small_y(const Psi1Params& p, cplx x, int order);

} // namespace humbert

#endif
