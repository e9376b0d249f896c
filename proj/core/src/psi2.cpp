#include "humbert/psi2.hpp"

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"

namespace humbert {

namespace {

void check_lower_params(const Psi2Params& p) {
    if (is_nonpos_int(p.c))
        throw ParameterPole("psi2: c at a nonpositive integer");
    if (is_nonpos_int(p.cp))
        throw ParameterPole("psi2: c' at a nonpositive integer");
}

EvalResult psi2_double_series(const Psi2Params& p, cplx x, cplx y,
                              const EvalConfig& cfg) {
    const real tol = cfg.target_rel_err;
    const int cap = std::min(cfg.max_terms, 30000);

    CompensatedSum acc;
    std::vector<cplx> diag{cplx(1, 0)};   // diag[m] = T(m, d-m)
    acc.add(diag[0]);

    int quiet = 0;
    for (int d = 1; d < cap; ++d) {
        std::vector<cplx> next(static_cast<size_t>(d) + 1);
        cplx ad1 = p.a + cplx(static_cast<real>(d - 1), 0);
        for (int m = 0; m < d; ++m) {
            cplx n(static_cast<real>(d - m), 0);
            next[m] = diag[m] * ad1 * y / ((p.cp + n - cplx(1, 0)) * n);
        }
        cplx md(static_cast<real>(d), 0);
        next[d] = diag[d - 1] * ad1 * x / ((p.c + md - cplx(1, 0)) * md);

        CompensatedSum row;
        for (const cplx& t : next) row.add(t);
        cplx dm = row.value();
        acc.add(dm);
        diag = std::move(next);

        real as = std::abs(acc.value());
        if (std::abs(dm) <= tol * as && d > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 4)
            return {acc.value(), std::abs(dm), "psi2.double_series", d + 1, 0,
                    0.0L};
    }
    throw NoConvergence("psi2.double_series: diagonal cap reached");
}

EvalResult psi2_f1f1_series(const Psi2Params& p, cplx x, cplx y,
                            const EvalConfig& cfg) {
    const real tol = cfg.target_rel_err;
    CompensatedSum acc;
    cplx coeff(1, 0);
    int quiet = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        cplx row = coeff * hyp1f1(p.a + cplx(static_cast<real>(n), 0), p.c,
                                  x, cfg);
        acc.add(row);
        real as = std::abs(acc.value());
        if (std::abs(row) <= tol * as && n > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3)
            return {acc.value(), std::abs(row), "psi2.f1f1_series", n + 1, 0,
                    0.0L};
        cplx fn(static_cast<real>(n), 0);
        coeff *= (p.a + fn) * y / ((p.cp + fn) * (fn + cplx(1, 0)));
    }
    throw NoConvergence("psi2.f1f1_series: max_terms exhausted");
}

EvalResult psi2_kummer_series(const Psi2Params& p, cplx x, cplx y,
                              const EvalConfig& cfg) {
    const real tol = cfg.target_rel_err;
    CompensatedSum acc;
    cplx coeff(1, 0);
    int quiet = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        cplx row = coeff * hyp1f1(p.c - p.a - cplx(static_cast<real>(n), 0),
                                  p.c, -x, cfg);
        acc.add(row);
        real as = std::abs(acc.value());
        if (std::abs(row) <= tol * as && n > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) {
            // factor e^x carried as log_scale (plus its phase) so Re(x)
            // beyond the overflow threshold stays representable
            cplx phase = std::exp(cplx(0, x.imag()));
            return {acc.value() * phase, std::abs(row),
                    "psi2.kummer_series", n + 1, 0, x.real()};
        }
        cplx fn(static_cast<real>(n), 0);
        coeff *= (p.a + fn) * y / ((p.cp + fn) * (fn + cplx(1, 0)));
    }
    throw NoConvergence("psi2.kummer_series: max_terms exhausted");
}

EvalResult psi2_mb_integral(const Psi2Params& p, cplx x, cplx y,
                            const EvalConfig& cfg) {
    if (y == cplx(0, 0))
        throw DomainError("psi2.mb_integral: y = 0");
    cplx my = -y;
    if (std::abs(std::arg(my)) > PI / 2.0L - cfg.sector_margin)
        throw DomainError(
            "psi2.mb_integral: requires |arg(-y)| <= pi/2 - delta");
    if (p.a.real() <= 0)
        throw DomainError("psi2.mb_integral: requires Re(a) > 0 so a "
                          "vertical line separates the pole families");

    real sigma = cfg.contour_abscissa;
    if (std::isnan(sigma))
        sigma = -0.5L * std::min<real>(p.a.real(), 1.0L);
    if (sigma <= -p.a.real() || sigma >= 0)
        throw DomainError("psi2.mb_integral: abscissa must lie in "
                          "(-Re(a), 0)");

    cplx pref = gamma_ratio({p.cp}, {p.a});
    cplx log_my = std::log(my);
    IntegrandSpec spec;
    spec.evaluator = [&p, x, sigma, log_my, &cfg](real t) -> cplx {
        cplx s(sigma, t);
        cplx g = log_gamma(p.a + s) - log_gamma(p.cp + s) + log_gamma(-s) +
                 s * log_my;
        return hyp1f1(p.a + s, p.c, x, cfg) * std::exp(g);
    };
    QuadResult q = integrate_vertical_line(spec, sigma, cfg);
    return {pref * q.value, std::abs(pref) * q.abs_err_est,
            "psi2.mb_integral", 0, q.evals, 0.0L};
}

} // namespace

EvalResult psi2_eval(const Psi2Params& p, cplx x, cplx y, Psi2Method method,
                     const EvalConfig& cfg) {
    check_lower_params(p);
    switch (method) {
    case Psi2Method::double_series:
        return psi2_double_series(p, x, y, cfg);
    case Psi2Method::f1f1_series:
        return psi2_f1f1_series(p, x, y, cfg);
    case Psi2Method::kummer_series:
        return psi2_kummer_series(p, x, y, cfg);
    case Psi2Method::mb_integral:
        return psi2_mb_integral(p, x, y, cfg);
    case Psi2Method::auto_select:
        break;
    }
    return psi2_f1f1_series(p, x, y, cfg);
}

EvalResult psi2_reference(const Psi2Params& p, cplx x, cplx y,
                          const EvalConfig& cfg) {
    return psi2_eval(p, x, y, Psi2Method::auto_select, cfg);
}

Psi2AsymLeft psi2_asym_left(const Psi2Params& p, cplx x, int order) {
    check_lower_params(p);
    if (order < 1)
        throw DomainError("psi2_asym_left: order >= 1 required");

    Psi2AsymLeft e;
    e.p = p;
    e.x = x;
    e.order = order;
    cplx pref = gamma_ratio({p.cp}, {p.cp - p.a});
    e.identically_zero = (pref == cplx(0, 0));
    e.coeff.assign(static_cast<size_t>(order), cplx(0, 0));
    cplx fac(1, 0);   // (a)_n (1+a-c')_n / n!
    for (int n = 0; n < order; ++n) {
        cplx fn(static_cast<real>(n), 0);
        e.coeff[static_cast<size_t>(n)] =
            pref * fac * pfq({-fn}, {p.c}, x).value;
        fac *= (p.a + fn) * (cplx(1, 0) + p.a - p.cp + fn) /
               (fn + cplx(1, 0));
    }
    return e;
}

ExpansionResult Psi2AsymLeft::at(cplx y) const {
    cplx my = -y;
    cplx base = cpow(my, -p.a);
    cplx inv = cplx(1, 0) / my;
    ExpansionResult out;
    out.order = order;
    out.validity = "|y| -> inf, |arg(-y)| <= pi/2 - delta";
    cplx t = base;
    CompensatedSum acc;
    for (int n = 0; n < order; ++n) {
        cplx term = coeff[static_cast<size_t>(n)] * t;
        acc.add(term);
        out.terms.push_back({term, -p.a - cplx(static_cast<real>(n), 0),
                             false});
        t *= inv;
    }
    out.value = acc.value();
    return out;
}

ExpansionResult psi2_asym_right(const Psi2Params& p, cplx x, cplx y, real t,
                                real sector_margin) {
    check_lower_params(p);
    if (t <= 0)
        throw DomainError("psi2_asym_right: t > 0 required");
    auto in_sector = [sector_margin](cplx z) {
        return z != cplx(0, 0) &&
               std::abs(std::arg(z)) <= PI / 2.0L - sector_margin;
    };
    if (!in_sector(x) || !in_sector(y))
        throw DomainError("psi2_asym_right: x, y must lie in the sector "
                          "|arg| <= pi/2 - delta");

    cplx sx = std::sqrt(x), sy = std::sqrt(y);
    cplx mu = sx + sy;
    cplx expo = t * mu * mu;
    real ls = expo.real();
    cplx tpow = p.a - p.c - p.cp + cplx(0.5L, 0);

    cplx val = gamma_ratio({p.c, p.cp}, {p.a}) /
               (2.0L * std::sqrt(PI)) *
               cpow(x, cplx(0.25L, 0) - 0.5L * p.c) *
               cpow(y, cplx(0.25L, 0) - 0.5L * p.cp) *
               cpow(mu, 2.0L * p.a - p.c - p.cp) *
               cpow(cplx(t, 0), tpow) *
               std::exp(expo - cplx(ls, 0));

    ExpansionResult out;
    out.value = val;
    out.order = 1;
    out.log_scale = ls;
    out.validity = "t -> +inf (or |y| -> inf at t = 1), x and y in the "
                   "sector |arg| <= pi/2 - delta";
    out.terms.push_back({val, tpow, true});
    return out;
}

uint128 lambda_n(int n) {
    if (n < 0) throw DomainError("lambda_n: n >= 0 required");
    if (n <= 2) return 1;
    auto fact = [](int k) {
        uint128 f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<uint128>(i);
        return f;
    };
    int m = n / 2;
    if (n % 2 == 1) return fact(m - 1) * fact(m);
    return fact(m - 1) * fact(m - 1);
}

uint128 lambda_n_min_form(int n) {
    if (n < 0) throw DomainError("lambda_n_min_form: n >= 0 required");
    if (n <= 2) return 1;
    auto fact = [](int k) {
        uint128 f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<uint128>(i);
        return f;
    };
    bool first = true;
    uint128 best = 0;
    for (int k = 1; k <= n - 1; ++k) {
        uint128 v = fact(k - 1) * fact(n - k - 1);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

Uniform2F2 uniform_2f2(cplx a, cplx b, cplx c, cplx d, int n, real w,
                       cplx z) {
    if (n < 0)
        throw DomainError("uniform_2f2: n >= 0 required");
    if (z.imag() == 0 && z.real() <= 0)
        throw DomainError("uniform_2f2: requires |arg(z)| < pi");
    if (z.imag() == 0) {
        // z must stay away from the lattice -b+k where the expansion's
        // denominators degenerate
        real frac = z.real() + b.real();
        if (b.imag() == 0 &&
            std::abs(frac - std::round(frac)) < 0.0995L)
            throw DomainError("uniform_2f2: z within 0.1 of the excluded "
                              "lattice -b+k");
    }
    if (w <= std::max({a.real(), b.real(), d.real()}))
        throw DomainError("uniform_2f2: w must exceed Re(a), Re(b), Re(d)");

    cplx nn(static_cast<real>(n), 0);
    Uniform2F2 out;
    out.n = n;
    out.w = w;
    out.pref = gamma_ratio({c, d}, {a, b - nn});

    long kS = static_cast<long>(std::floor(w - a.real()));
    long kT = static_cast<long>(std::floor(w - b.real())) + n;

    CompensatedSum S, T;
    real sign = 1;
    real kfact = 1;
    for (long k = 0; k <= kS; ++k) {
        cplx fk(static_cast<real>(k), 0);
        S.add(gamma_ratio({a + fk, b - a - nn - fk}, {c - a - fk, d - a - fk}) *
              (sign / kfact) * cpow(z, -a - fk));
        sign = -sign;
        kfact *= static_cast<real>(k + 1);
    }
    sign = 1;
    kfact = 1;
    for (long k = 0; k <= kT; ++k) {
        cplx fk(static_cast<real>(k), 0);
        T.add(gamma_ratio({b - nn + fk, a - b + nn - fk},
                          {c - b + nn - fk, d - b + nn - fk}) *
              (sign / kfact) * cpow(z, nn - b - fk));
        sign = -sign;
        kfact *= static_cast<real>(k + 1);
    }
    out.S = S.value();
    out.T = T.value();
    out.value = out.pref * (out.S + out.T);

    real az = std::abs(z);
    real lam = static_cast<real>(lambda_n(n));
    out.envelope_raw = (std::pow(az, -w) +
                        std::pow(az, (a + b - c - d).real()) *
                            std::exp(-z.real())) /
                       lam;
    out.envelope = std::abs(out.pref) * out.envelope_raw;
    return out;
}

Uniform1F1 uniform_1f1(cplx b, cplx d, int n, cplx z, int N) {
    if (n < 0 || N < 1)
        throw DomainError("uniform_1f1: n >= 0, N >= 1 required");
    if (z.imag() == 0 && z.real() <= 0)
        throw DomainError("uniform_1f1: requires |arg(z)| < pi");

    cplx nn(static_cast<real>(n), 0);
    cplx pref = gamma_ratio({d}, {b - nn});
    CompensatedSum acc;
    real sign = 1;
    real kfact = 1;
    for (int k = 0; k <= n + N; ++k) {
        cplx fk(static_cast<real>(k), 0);
        acc.add(gamma_ratio({b - nn + fk}, {d - b + nn - fk}) *
                (sign / kfact) * cpow(z, nn - b - fk));
        sign = -sign;
        kfact *= static_cast<real>(k + 1);
    }

    Uniform1F1 out;
    out.n = n;
    out.N = N;
    out.value = pref * acc.value();
    real az = std::abs(z);
    real nfact = std::exp(std::lgamma(static_cast<double>(n) + 1.0));
    out.envelope = std::pow(static_cast<real>(n + 1), -b.real()) * nfact /
                   static_cast<real>(lambda_n(n)) *
                   (std::pow(az, -b.real() - N - 0.5L) +
                    std::pow(az, (b - d).real()) * std::exp(-z.real()));
    return out;
}

Psi2AsymBeta psi2_asym_beta(const Psi2Params& p, cplx beta, int order,
                            const EvalConfig& cfg) {
    check_lower_params(p);
    if (order < 1)
        throw DomainError("psi2_asym_beta: order >= 1 required");
    if (beta == cplx(0, 0))
        throw DomainError("psi2_asym_beta: beta must be nonzero");

    Psi2AsymBeta e;
    e.p = p;
    e.beta = beta;
    e.order = order;
    e.b1.assign(static_cast<size_t>(order), cplx(0, 0));
    e.b2.assign(static_cast<size_t>(order), cplx(0, 0));
    e.b3.assign(static_cast<size_t>(order), cplx(0, 0));

    cplx a = p.a, ac1 = p.a - p.c + cplx(1, 0), cp = p.cp;
    for (int m = 0; m < order; ++m) {
        cplx fm(static_cast<real>(m), 0);

        // With every power carried on the principal branch of -x, the
        // inner beta sign cancels against 1/Gamma(c-a-n) reflection and
        // the coefficients take +beta^n.
        CompensatedSum s1;
        for (int nn = 0; 2 * nn <= m; ++nn) {
            long k = m - 2L * nn;
            s1.add(pochhammer(a, nn + k) * pochhammer(ac1, nn + k) /
                   (pochhammer(cp, nn) * pochhammer(cplx(1, 0), nn) *
                    pochhammer(cplx(1, 0), k)) *
                   cpow(beta, cplx(static_cast<real>(nn), 0)));
        }
        e.b1[static_cast<size_t>(m)] = s1.value();

        cplx f34 = pfq({cplx(1, 0), a + fm, ac1 + fm},
                       {a, ac1, cplx(1, 0) + fm, cp + fm}, beta, cfg).value;
        cplx mfact = pochhammer(cplx(1, 0), m);
        e.b2[static_cast<size_t>(m)] =
            f34 * pochhammer(a, m) * pochhammer(ac1, m) /
            (pochhammer(cp, m) * mfact * mfact) *
            cpow(beta, fm);

        if (m >= 1) {
            CompensatedSum s3;
            for (int nn = 0; nn < m; ++nn) {
                cplx fn(static_cast<real>(nn), 0);
                s3.add(pochhammer(cplx(1, 0) - a - fn, m) *
                       pochhammer(p.c - a - fn, m) /
                       (pochhammer(cp, nn) * pochhammer(cplx(1, 0), nn)) *
                       cpow(beta, fn));
            }
            e.b3[static_cast<size_t>(m)] = s3.value() / mfact;
        }
    }
    return e;
}

cplx Psi2AsymBeta::algebraic_part(cplx x) const {
    // The recessive branch carries powers of -x (principal), the usual
    // branch convention of the two-branch 1F1 form; across the positive
    // real axis its discontinuity sits below the exponential branch.
    cplx inv = cplx(-1, 0) / x;
    CompensatedSum acc;
    cplx t = cpow(-x, -p.a);
    for (int m = 0; m < order; ++m) {
        acc.add(b1[static_cast<size_t>(m)] * t);
        t *= inv;
    }
    return gamma_ratio({p.c}, {p.c - p.a}) * acc.value();
}

cplx Psi2AsymBeta::exponential_part(cplx x) const {
    cplx inv = cplx(1, 0) / x;
    CompensatedSum acc;
    cplx t = cpow(x, p.a - p.c);
    for (int m = 0; m < order; ++m) {
        acc.add((b2[static_cast<size_t>(m)] + b3[static_cast<size_t>(m)]) *
                t);
        t *= inv;
    }
    return gamma_ratio({p.c}, {p.a}) * std::exp(x) * acc.value();
}

ExpansionResult Psi2AsymBeta::at(cplx x) const {
    real ls = std::max(x.real(), 0.0L);
    cplx alg = algebraic_part(x) * std::exp(cplx(-ls, 0));
    cplx inv = cplx(1, 0) / x;
    CompensatedSum acc;
    cplx t = cpow(x, p.a - p.c);
    for (int m = 0; m < order; ++m) {
        acc.add((b2[static_cast<size_t>(m)] + b3[static_cast<size_t>(m)]) *
                t);
        t *= inv;
    }
    cplx expo = gamma_ratio({p.c}, {p.a}) * acc.value() *
                std::exp(x - cplx(ls, 0));

    ExpansionResult out;
    out.order = order;
    out.log_scale = ls;
    out.validity = "|x| -> inf, |arg(x)| < pi, x*y = beta fixed, x away "
                   "from the lattice a-c+k";
    out.terms.push_back({alg, -p.a, false});
    out.terms.push_back({expo, p.a - p.c, true});
    out.value = alg + expo;
    return out;
}

real Psi2AsymBeta::envelope(cplx x) const {
    real ax = std::abs(x);
    real ex = x.real() < 700.0L ? std::exp(x.real()) : std::exp(700.0L);
    return std::pow(ax, -p.a.real() - order) +
           std::pow(ax, (p.a - p.c).real() - order - 0.5L) * ex;
}

} // namespace humbert
