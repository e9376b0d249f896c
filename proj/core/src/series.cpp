#include "humbert/series.hpp"

#include <cmath>
#include <limits>

#include "humbert/ddreal.hpp"
#include "humbert/errors.hpp"

namespace humbert {

SeriesResult pfq(const std::vector<cplx>& upper,
                 const std::vector<cplx>& lower, cplx z,
                 const EvalConfig& cfg) {
    // A terminating upper parameter -k caps the series at k+1 terms.
    long terminate_at = -1;
    for (const cplx& a : upper) {
        long k;
        if (is_nonpos_int(a, &k))
            if (terminate_at < 0 || k < terminate_at) terminate_at = k;
    }
    for (const cplx& b : lower) {
        long m;
        if (is_nonpos_int(b, &m)) {
            if (terminate_at < 0 || terminate_at > m)
                throw ParameterPole(
                    "pfq: lower parameter at a nonpositive integer");
        }
    }
    if (terminate_at < 0) {
        if (upper.size() > lower.size() + 1)
            throw DomainError("pfq: divergent series (p > q+1, nonterminating)");
        if (upper.size() == lower.size() + 1 && std::abs(z) >= 1.0L)
            throw DomainError("pfq: p = q+1 series requires |z| < 1");
    }

    const real tol = cfg.target_rel_err;
    const real floor_abs = std::numeric_limits<real>::min() * 1e6L;
    CompensatedSum acc;
    cplx term(1, 0);
    acc.add(term);

    int n = 0;
    int small_streak = 0;
    real tail = std::abs(term);
    for (;; ++n) {
        if (terminate_at >= 0 && n >= terminate_at) {
            return {acc.value(), 0.0L, n + 1, true};
        }
        if (n >= cfg.max_terms)
            throw NoConvergence("pfq: max_terms exhausted");

        cplx ratio = z / cplx(static_cast<real>(n + 1), 0);
        for (const cplx& a : upper) ratio *= a + cplx(static_cast<real>(n), 0);
        for (const cplx& b : lower) ratio /= b + cplx(static_cast<real>(n), 0);
        cplx prev = term;
        term = term * ratio;
        acc.add(term);

        real at = std::abs(term);
        real as = std::abs(acc.value());
        if (at <= tol * as || as < floor_abs)
            ++small_streak;
        else
            small_streak = 0;

        if (small_streak >= 3) {
            real r = std::abs(prev) > 0 ? at / std::abs(prev) : 0.0L;
            if (r < 0.9L) {
                tail = at * r / (1.0L - r);
                if (tail <= tol * as || as < floor_abs)
                    return {acc.value(), tail, n + 2, true};
            }
        }
    }
}

real pfq_dd(const std::vector<real>& upper, const std::vector<real>& lower,
            real z, int max_terms) {
    using detail::dd;
    dd sum(1.0L), term(1.0L);
    for (int n = 0; n < max_terms; ++n) {
        dd num(z), den(static_cast<real>(n + 1));
        for (real a : upper) num *= dd(a + static_cast<real>(n));
        for (real b : lower) den *= dd(b + static_cast<real>(n));
        term = term * num / den;
        sum += term;
        if (std::fabs(term.hi) <=
            1e-35L * std::max<real>(std::fabs(sum.hi), 1e-300L) &&
            n > 4)
            return static_cast<real>(sum);
        if (term.hi == 0.0L) return static_cast<real>(sum);
    }
    throw NoConvergence("pfq_dd: max_terms exhausted");
}

} // namespace humbert
