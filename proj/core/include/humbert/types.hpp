#ifndef HUMBERT_TYPES_HPP
#define HUMBERT_TYPES_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace humbert {

// Extended-precision working type.  All internal summation additionally
// uses compensated accumulation; the public contract is relative error
// <= max(target_rel_err, 1e-13).
using real = long double;
using cplx = std::complex<real>;

inline constexpr real PI = 3.14159265358979323846264338327950288L;

struct EvalConfig {
    real target_rel_err = 1e-12L;
    int max_terms = 100000;
    long max_evals = 4000000;
    // Abscissa of the vertical Mellin-Barnes path; NaN selects it
    // automatically between the two pole families.
    real contour_abscissa = std::numeric_limits<real>::quiet_NaN();
    // Sector margin delta in (0, pi/2].
    real sector_margin = 0.05L;
};

struct SeriesResult {
    cplx value{};
    real abs_tail_bound = 0;
    int terms_used = 0;
    bool converged = false;
};

struct QuadResult {
    cplx value{};
    real abs_err_est = 0;
    long evals = 0;
};

// value * exp(log_scale) is the represented quantity.  log_scale is 0
// except for regimes that overflow the working range.
struct EvalResult {
    cplx value{};
    real abs_err = 0;        // absolute error estimate on `value`
    std::string method;
    long terms = 0;
    long evals = 0;
    real log_scale = 0;

    cplx scaled() const { return value * std::exp(cplx(log_scale, 0)); }
};

// One term of an asymptotic expansion: coeff * base^power, optionally
// carrying the exponential scale factor of its branch.
struct ExpansionTerm {
    cplx coeff{};
    cplx power{};      // exponent of the expansion variable
    bool exponential = false;
};

struct ExpansionResult {
    cplx value{};
    std::vector<ExpansionTerm> terms;
    int order = 0;            // truncation order N
    std::string validity;     // human-readable validity descriptor
    real log_scale = 0;

    cplx scaled() const { return value * std::exp(cplx(log_scale, 0)); }
};

inline bool is_nonpos_int(const cplx& z, long* k = nullptr) {
    if (z.imag() != 0) return false;
    real r = z.real();
    if (r > 0.25L) return false;
    real n = std::round(r);
    if (std::abs(r - n) > 1e-14L * std::max<real>(1, std::abs(r))) return false;
    if (k) *k = static_cast<long>(-n);
    return true;
}

} // namespace humbert

#endif
