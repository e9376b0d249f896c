#include "humbert/special.hpp"

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"

namespace humbert {

KummerLargeZ kummer_large_z(cplx a, cplx c, cplx z, int terms) {
    if (z == cplx(0, 0))
        throw DomainError("kummer_large_z: z = 0");
    if (terms < 1)
        throw DomainError("kummer_large_z: N >= 1 required");

    KummerLargeZ out;
    out.order = terms;

    // Algebraic branch; prefactor vanishes identically at c-a poles.
    cplx pref_alg = gamma_ratio({c}, {c - a});
    if (pref_alg != cplx(0, 0)) {
        cplx minus_z = -z;
        cplx t = cpow(minus_z, -a);
        CompensatedSum s;
        for (int n = 0; n < terms; ++n) {
            s.add(t);
            cplx fn(static_cast<real>(n), 0);
            t *= (a + fn) * (cplx(1, 0) + a - c + fn) /
                 ((fn + cplx(1, 0)) * minus_z);
        }
        out.algebraic = pref_alg * s.value();
    }

    // Exponential branch; vanishes at a poles.
    cplx pref_exp = gamma_ratio({c}, {a});
    if (pref_exp != cplx(0, 0)) {
        cplx t = cpow(z, a - c);
        CompensatedSum s;
        for (int n = 0; n < terms; ++n) {
            s.add(t);
            cplx fn(static_cast<real>(n), 0);
            t *= (cplx(1, 0) - a + fn) * (c - a + fn) / ((fn + cplx(1, 0)) * z);
        }
        out.exponential = pref_exp * std::exp(z) * s.value();
    }
    return out;
}

namespace {

// Both branches of the 40-term large-z form sit below the target
// accuracy once |z| clears the parameter-adjusted radius.
bool kummer_regime(cplx a, cplx c, cplx z) {
    real az = std::abs(z);
    return az > 700.0L &&
           az > 30.0L * (1.0L + std::abs(a)) * (1.0L + std::abs(c - a));
}

} // namespace

cplx hyp1f1(cplx a, cplx c, cplx z, const EvalConfig& cfg) {
    long k;
    if (is_nonpos_int(a, &k))
        return pfq({a}, {c}, z, cfg).value;   // terminating, exact
    if (kummer_regime(a, c, z))
        return kummer_large_z(a, c, z, 40).value();
    if (z.real() < 0) {
        // Kummer transformation keeps the summed argument in the right
        // half-plane, avoiding catastrophic cancellation.
        return std::exp(z) * pfq({c - a}, {c}, -z, cfg).value;
    }
    return pfq({a}, {c}, z, cfg).value;
}

cplx hyp1f1_scaled(cplx a, cplx c, cplx z, const EvalConfig& cfg) {
    real rz = z.real();
    if (rz <= 0)
        return hyp1f1(a, c, z, cfg);   // bounded, no rescaling needed
    long k;
    if (is_nonpos_int(a, &k))
        return std::exp(cplx(-rz, 0)) * pfq({a}, {c}, z, cfg).value;
    if (!kummer_regime(a, c, z) && std::abs(z) <= 5000.0L)
        return std::exp(cplx(-rz, 0)) * pfq({a}, {c}, z, cfg).value;

    // Large-z branches with e^(-Re z) folded in before exponentiating.
    cplx out(0, 0);
    cplx pref_alg = gamma_ratio({c}, {c - a});
    if (pref_alg != cplx(0, 0) && rz < 11300.0L) {
        cplx minus_z = -z, t = cpow(minus_z, -a);
        CompensatedSum s;
        for (int n = 0; n < 40; ++n) {
            s.add(t);
            cplx fn(static_cast<real>(n), 0);
            t *= (a + fn) * (cplx(1, 0) + a - c + fn) /
                 ((fn + cplx(1, 0)) * minus_z);
        }
        out += pref_alg * std::exp(cplx(-rz, 0)) * s.value();
    }
    cplx pref_exp = gamma_ratio({c}, {a});
    if (pref_exp != cplx(0, 0)) {
        cplx t = cpow(z, a - c);
        CompensatedSum s;
        for (int n = 0; n < 40; ++n) {
            s.add(t);
            cplx fn(static_cast<real>(n), 0);
            t *= (cplx(1, 0) - a + fn) * (c - a + fn) /
                 ((fn + cplx(1, 0)) * z);
        }
        out += pref_exp * std::exp(cplx(0, z.imag())) * s.value();
    }
    return out;
}

cplx hyp0f1(cplx c, cplx z, const EvalConfig& cfg) {
    real az = std::abs(z);
    if (z.real() < 0 && az > 100.0L) {
        // The alternating series loses ~2 sqrt|z| / ln 10 digits to
        // cancellation; reroute through a double-length sum or the
        // Bessel large-argument form.
        if (z.imag() == 0 && c.imag() == 0 && az <= 750.0L &&
            !is_nonpos_int(c))
            return cplx(pfq_dd({}, {c.real()}, z.real()), 0);
        return gamma_fn(c) * cpow(z, (cplx(1, 0) - c) * 0.5L) *
               bessel_i(c - cplx(1, 0), 2.0L * std::sqrt(z), cfg);
    }
    return pfq({}, {c}, z, cfg).value;
}

namespace {

// Large-z exponential form, optionally scaled by e^(-z).
cplx bessel_i_asym(cplx nu, cplx z, bool scaled) {
    const cplx inv8z = cplx(1, 0) / (8.0L * z);
    auto branch_sum = [&](real sign) {
        // sum a_k(nu) (sign/(8z))^k, a_k ratio (4nu^2-(2k-1)^2)/(8k z).
        CompensatedSum s;
        cplx t(1, 0);
        real prev = 1e300L;
        for (int k = 1; k <= 40; ++k) {
            s.add(t);
            cplx fac = (4.0L * nu * nu -
                        cplx(static_cast<real>((2 * k - 1) * (2 * k - 1)), 0)) *
                       inv8z * (sign / static_cast<real>(k));
            t *= fac;
            real at = std::abs(t);
            if (at < 1e-22L) { s.add(t); break; }
            if (at > prev) break;   // asymptotic tail started growing
            prev = at;
        }
        return s.value();
    };

    cplx front = cplx(1, 0) / std::sqrt(2.0L * PI * z);
    cplx grow = branch_sum(-1.0L);
    cplx decay = branch_sum(+1.0L);
    real sgn = (std::arg(z) >= 0) ? 1.0L : -1.0L;
    cplx phase = std::exp(cplx(0, sgn * PI) * (nu + cplx(0.5L, 0)));
    if (scaled)
        return front * (grow + phase * std::exp(-2.0L * z) * decay);
    return front * (std::exp(z) * grow + phase * std::exp(-z) * decay);
}

} // namespace

cplx bessel_i(cplx nu, cplx z, const EvalConfig& cfg) {
    long k;
    if (is_nonpos_int(nu, &k) && k > 0) nu = -nu;   // I_{-n} = I_n
    if (z == cplx(0, 0)) {
        if (nu == cplx(0, 0)) return cplx(1, 0);
        if (nu.real() > 0) return cplx(0, 0);
        throw DomainError("bessel_i: z = 0 with Re(nu) < 0");
    }
    bool nu_integer = nu.imag() == 0 &&
        std::abs(nu.real() - std::round(nu.real())) < 1e-14L;
    if (z.imag() == 0 && z.real() < 0 && !nu_integer)
        throw BranchCutError("bessel_i: z on the negative real axis with "
                             "noninteger nu");

    real crossover = 30.0L + 2.0L * std::norm(nu);
    if (std::abs(z) > crossover)
        return bessel_i_asym(nu, z, false);

    cplx half_z = 0.5L * z;
    return cpow(half_z, nu) / gamma_fn(nu + cplx(1, 0)) *
           hyp0f1(nu + cplx(1, 0), half_z * half_z, cfg);
}

cplx bessel_i_scaled(cplx nu, cplx z, const EvalConfig& cfg) {
    real crossover = 30.0L + 2.0L * std::norm(nu);
    if (std::abs(z) > crossover)
        return bessel_i_asym(nu, z, true);
    return std::exp(-z) * bessel_i(nu, z, cfg);
}

cplx erf_fn(cplx z) {
    if (z == cplx(0, 0)) return cplx(0, 0);
    // erf(z) = 2 z / sqrt(pi) e^(-z^2) 1F1[1; 3/2; z^2]; the transformed
    // series has positive terms for real z.
    static const real two_over_sqrt_pi =
        1.1283791670955125738961589031215452L;
    cplx z2 = z * z;
    return two_over_sqrt_pi * z * std::exp(-z2) *
           pfq({cplx(1, 0)}, {cplx(1.5L, 0)}, z2).value;
}

} // namespace humbert
