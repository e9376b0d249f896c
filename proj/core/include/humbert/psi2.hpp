#ifndef HUMBERT_PSI2_HPP
#define HUMBERT_PSI2_HPP

#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// Psi2[a; c, c'; x, y]: entire in both variables, symmetric under
// (c, x) <-> (c', y).
struct Psi2Params {
    cplx a, c, cp;
};

enum class Psi2Method {
    auto_select,
    double_series,   // diagonal summation of the defining double series
    f1f1_series,     // sum_n (a)_n/(c')_n 1F1[a+n; c; x] y^n/n!
    kummer_series,   // e^x sum_n (a)_n/(c')_n 1F1[c-a-n; c; -x] y^n/n!
    mb_integral      // Mellin-Barnes vertical-line integral in s
};

EvalResult psi2_eval(const Psi2Params& p, cplx x, cplx y,
                     Psi2Method method = Psi2Method::auto_select,
                     const EvalConfig& cfg = {});

EvalResult psi2_reference(const Psi2Params& p, cplx x, cplx y,
                          const EvalConfig& cfg = {});

// Large |y| in the sector |arg(-y)| <= pi/2 - delta:
// Gamma(c')/Gamma(c'-a) sum_n 1F1[-n; c; x] (a)_n (1+a-c')_n / n!
// (-y)^(-a-n).  The terminating 1F1 factors are exact finite sums.
struct Psi2AsymLeft {
    Psi2Params p;
    cplx x;
    int order = 0;
    std::vector<cplx> coeff;     // prefactor folded in; size `order`
    bool identically_zero = false;   // Gamma(c'-a) pole

    ExpansionResult at(cplx y) const;
};

Psi2AsymLeft psi2_asym_left(const Psi2Params& p, cplx x, int order);

// Leading exponential form for t -> +inf with x, y in the sector
// |arg| <= pi/2 - delta:
// Gamma(c)Gamma(c')/(2 sqrt(pi) Gamma(a)) x^(1/4-c/2) y^(1/4-c'/2)
// (sqrt x + sqrt y)^(2a-c-c') t^(a-c-c'+1/2) e^(t (sqrt x + sqrt y)^2),
// with the exponential carried in log_scale.  t = 1 gives the fixed-x
// large-y form.
ExpansionResult psi2_asym_right(const Psi2Params& p, cplx x, cplx y,
                                real t = 1.0L, real sector_margin = 0.05L);

// lambda_n: 1 for n <= 2, else min over 1<=k<=n-1 of (k-1)!(n-k-1)!.
// Exact integers; n = 40 needs ~115 bits.
using uint128 = unsigned __int128;
uint128 lambda_n(int n);            // closed form
uint128 lambda_n_min_form(int n);   // literal minimum

// Two-branch large-z expansion of 2F2[a, b-n; c, d; -z] with truncation
// controlled by the shift w, plus the remainder-bound envelope
// lambda_n^{-1} (|z|^-w + |z|^Re(a+b-c-d) e^(-Re z)).
struct Uniform2F2 {
    cplx S, T;           // branch sums, before the Gamma prefactor
    cplx pref;           // Gamma(c)Gamma(d)/(Gamma(a)Gamma(b-n))
    cplx value;          // pref * (S + T)
    real envelope_raw;   // lambda_n^{-1} (|z|^-w + ...) alone
    real envelope;       // |pref| * envelope_raw
    int n = 0;
    real w = 0;
};

Uniform2F2 uniform_2f2(cplx a, cplx b, cplx c, cplx d, int n, real w,
                       cplx z);

// Algebraic branch of 1F1[b-n; d; -z], truncated at k = n+N, with the
// n-uniform remainder envelope (n+1)^(-Re b) n! lambda_n^{-1} {...}.
struct Uniform1F1 {
    cplx value;
    real envelope;
    int n = 0, N = 0;
};

Uniform1F1 uniform_1f1(cplx b, cplx d, int n, cplx z, int N);

// Large-x expansion at fixed beta = x*y: an algebraic branch
// Gamma(c)/Gamma(c-a) x^(-a) sum b1(m) x^(-m) and an exponential branch
// Gamma(c)/Gamma(a) x^(a-c) e^x sum (b2(m)+b3(m)) x^(-m).
struct Psi2AsymBeta {
    Psi2Params p;
    cplx beta;
    int order = 0;
    std::vector<cplx> b1, b2, b3;   // b3[0] = 0 by construction

    cplx algebraic_part(cplx x) const;     // includes its prefactor
    cplx exponential_part(cplx x) const;   // includes e^x; Re(x) <= 700
    ExpansionResult at(cplx x) const;      // both branches, log-scaled
    real envelope(cplx x) const;           // first-omitted-order size
};

Psi2AsymBeta psi2_asym_beta(const Psi2Params& p, cplx beta, int order,
                            const EvalConfig& cfg = {});

} // namespace humbert

#endif
