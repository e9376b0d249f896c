#ifndef HUMBERT_SPECIAL_HPP
#define HUMBERT_SPECIAL_HPP

#include "humbert/series.hpp"
#include "humbert/types.hpp"

namespace humbert {

// Two-branch large-z expansion of 1F1[a; c; z], truncated at N terms
// per branch.  `algebraic` carries Gamma(c)/Gamma(c-a) sum (a)_n
// (1+a-c)_n / n! (-z)^(-a-n); `exponential` carries Gamma(c)/Gamma(a)
// e^z sum (1-a)_n (c-a)_n / n! z^(a-c-n).
struct KummerLargeZ {
    cplx algebraic{};
    cplx exponential{};   // already includes the e^z factor
    int order = 0;
    cplx value() const { return algebraic + exponential; }
};

KummerLargeZ kummer_large_z(cplx a, cplx c, cplx z, int terms);

// 1F1[a; c; z] with the Kummer transformation applied on the left
// half-plane for numerical stability; switches to the two-branch
// large-z form once the series cost outweighs it.
cplx hyp1f1(cplx a, cplx c, cplx z, const EvalConfig& cfg = {});

// e^(-max(Re z, 0)) 1F1[a; c; z]; finite for arbitrarily large Re(z).
cplx hyp1f1_scaled(cplx a, cplx c, cplx z, const EvalConfig& cfg = {});

// 0F1[; c; z].
cplx hyp0f1(cplx c, cplx z, const EvalConfig& cfg = {});

// Modified Bessel function I_nu(z), principal branch of (z/2)^nu.
// Switches from the defining series to the large-z exponential form at
// |z| = 30 + 2|nu|^2.
cplx bessel_i(cplx nu, cplx z, const EvalConfig& cfg = {});

// e^(-z) I_nu(z); stable for large Re(z) > 0.
cplx bessel_i_scaled(cplx nu, cplx z, const EvalConfig& cfg = {});

// Error function, entire.
cplx erf_fn(cplx z);

} // namespace humbert

#endif
