#include "humbert/psi1.hpp"

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"

namespace humbert {

namespace {

bool is_int(cplx z) {
    return z.imag() == 0 &&
           std::abs(z.real() - std::round(z.real())) < 1e-12L;
}

void check_lower_params(const Psi1Params& p) {
    if (is_nonpos_int(p.c))
        throw ParameterPole("psi1: c at a nonpositive integer");
    if (is_nonpos_int(p.cp))
        throw ParameterPole("psi1: c' at a nonpositive integer");
}

// Diagonal summation of sum_{k,l} (a)_{k+l} (b)_k / ((c)_k (c')_l)
// x^k y^l / (k! l!).  Each diagonal m is built from the previous one by
// a single multiplicative step per entry, plus one edge step along the
// k-axis.
EvalResult psi1_double_series(const Psi1Params& p, cplx x, cplx y,
                              const EvalConfig& cfg) {
    if (std::abs(x) >= 1.0L)
        throw DomainError("psi1.double_series: requires |x| < 1");
    const real tol = cfg.target_rel_err;
    const int cap = std::min(cfg.max_terms, 30000);

    CompensatedSum acc;
    std::vector<cplx> diag{cplx(1, 0)};   // diag[k] = T(k, m-k)
    acc.add(diag[0]);

    int quiet = 0;
    for (int m = 1; m < cap; ++m) {
        std::vector<cplx> next(static_cast<size_t>(m) + 1);
        cplx am1 = p.a + cplx(static_cast<real>(m - 1), 0);
        for (int k = 0; k < m; ++k) {
            cplx l(static_cast<real>(m - k), 0);
            next[k] = diag[k] * am1 * y /
                      ((p.cp + l - cplx(1, 0)) * l);
        }
        cplx km(static_cast<real>(m), 0);
        next[m] = diag[m - 1] * am1 * (p.b + km - cplx(1, 0)) * x /
                  ((p.c + km - cplx(1, 0)) * km);

        CompensatedSum row;
        for (const cplx& t : next) row.add(t);
        cplx dm = row.value();
        acc.add(dm);
        diag = std::move(next);

        real as = std::abs(acc.value());
        if (std::abs(dm) <= tol * as && m > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 4)
            return {acc.value(), std::abs(dm), "psi1.double_series", m + 1, 0,
                    0.0L};
    }
    throw NoConvergence("psi1.double_series: diagonal cap reached");
}

EvalResult psi1_f1f1_series(const Psi1Params& p, cplx x, cplx y,
                            const EvalConfig& cfg) {
    if (std::abs(x) >= 1.0L)
        throw DomainError("psi1.f1f1_series: requires |x| < 1");
    const real tol = cfg.target_rel_err;
    CompensatedSum acc;
    cplx coeff(1, 0);
    int quiet = 0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        cplx row = coeff * hyp1f1(p.a + cplx(static_cast<real>(k), 0), p.cp,
                                  y, cfg);
        acc.add(row);
        real as = std::abs(acc.value());
        if (std::abs(row) <= tol * as && k > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3)
            return {acc.value(), std::abs(row), "psi1.f1f1_series", k + 1, 0,
                    0.0L};
        cplx fk(static_cast<real>(k), 0);
        coeff *= (p.a + fk) * (p.b + fk) * x /
                 ((p.c + fk) * (fk + cplx(1, 0)));
    }
    throw NoConvergence("psi1.f1f1_series: max_terms exhausted");
}

EvalResult psi1_euler(const Psi1Params& p, cplx x, cplx y,
                      const EvalConfig& cfg) {
    if (p.c.real() <= p.b.real() || p.b.real() <= 0)
        throw DomainError("psi1.euler: requires Re(c) > Re(b) > 0");
    if (x.imag() == 0 && x.real() >= 1.0L)
        throw BranchCutError("psi1.euler: x on the cut [1, inf)");

    cplx pref = gamma_ratio({p.c}, {p.b, p.c - p.b});
    IntegrandSpec spec;
    spec.alpha = p.b;
    spec.beta = p.c - p.b;
    // t^(b-1) (1-t)^(c-b-1) is applied by the quadrature rule
    spec.evaluator = [&p, x, y, &cfg](real t) -> cplx {
        cplx one_m_xt = cplx(1, 0) - x * t;
        return cpow(one_m_xt, -p.a) * hyp1f1(p.a, p.cp, y / one_m_xt, cfg);
    };
    QuadResult q = integrate_unit_interval(spec, cfg);
    return {pref * q.value, std::abs(pref) * q.abs_err_est, "psi1.euler", 0,
            q.evals, 0.0L};
}

EvalResult psi1_laplace(const Psi1Params& p, cplx x, cplx y,
                        const EvalConfig& cfg) {
    if (p.a.real() <= 0)
        throw DomainError("psi1.laplace: requires Re(a) > 0");
    if (x.real() >= 1.0L)
        throw DomainError("psi1.laplace: requires Re(x) < 1");
    cplx pref = gamma_ratio({}, {p.a});

    // Large positive y: the kernel concentrates in a Gaussian peak on
    // the exponential scale e^(y/r), r = 1 - max(x, 0).  The saddle of
    // (x-1)u + 2 sqrt(y u) (resp. -u + 2 sqrt(y u) for x <= 0, where
    // the 1F1 factor carries no exponential growth) sits at
    // sqrt(u*) = sqrt(y)/r, and the exponent is exactly y/r - v^2 in
    // the recentred variable v = sqrt(r) (sqrt(u) - sqrt(u*)).
    if (y.imag() == 0 && y.real() >= 100.0L && x.imag() == 0) {
        real ry = y.real();
        real r = 1.0L - std::max(x.real(), 0.0L);
        real su0 = std::sqrt(ry) / r;
        real ls = ry / r;
        cplx gcp = gamma_fn(p.cp);
        const real vmax = 8.5L;
        IntegrandSpec spec;
        spec.evaluator = [&p, x, ry, r, su0, ls, gcp, vmax,
                          &cfg](real s) -> cplx {
            real v = -vmax + 2.0L * vmax * s;
            real su = su0 + v / std::sqrt(r);
            if (su <= 0) return cplx(0, 0);
            real u = su * su;
            real w = 2.0L * std::sqrt(ry) * su;   // = 2 sqrt(y u)
            real xu = x.real() * u;
            real expo = -u + std::max(xu, 0.0L) + w - ls;
            return (2.0L * vmax / std::sqrt(r)) * (2.0L * su) *
                   cpow(cplx(u, 0), p.a - cplx(1, 0)) *
                   hyp1f1_scaled(p.b, p.c, cplx(xu, 0), cfg) * gcp *
                   cpow(cplx(ry * u, 0),
                        (cplx(1, 0) - p.cp) * cplx(0.5L, 0)) *
                   bessel_i_scaled(p.cp - cplx(1, 0), cplx(w, 0), cfg) *
                   std::exp(expo);
        };
        QuadResult q = integrate_unit_interval(spec, cfg);
        return {pref * q.value, std::abs(pref) * q.abs_err_est,
                "psi1.laplace", 0, q.evals, ls};
    }

    IntegrandSpec spec;
    spec.alpha = p.a;
    spec.decay = DecayClass::exponential;
    spec.evaluator = [&p, x, y, &cfg](real u) -> cplx {
        // log-magnitude bound of the kernel; once it is below the
        // representable range the tail contributes nothing
        real lb = -u + std::max(x.real(), 0.0L) * u +
                  2.0L * std::sqrt(std::abs(y) * u) +
                  (p.a.real() - 1.0L) * std::log(u);
        if (lb < -11300.0L) return cplx(0, 0);
        cplx xu = x * u;
        real rescale = std::max(xu.real(), 0.0L);
        return std::exp((p.a - cplx(1, 0)) * std::log(u) - u +
                        cplx(rescale, 0)) *
               hyp1f1_scaled(p.b, p.c, xu, cfg) * hyp0f1(p.cp, y * u, cfg);
    };
    QuadResult q = integrate_halfline(spec, cfg);
    return {pref * q.value, std::abs(pref) * q.abs_err_est, "psi1.laplace",
            0, q.evals, 0.0L};
}

EvalResult psi1_continuation(const Psi1Params& p, cplx x, cplx y,
                             const EvalConfig& cfg) {
    if (std::abs(x) <= 1.0L)
        throw DomainError("psi1.continuation: requires |x| > 1");
    if (x.imag() == 0 && x.real() >= 0)
        throw BranchCutError(
            "psi1.continuation: x on the positive real axis");
    if (is_int(p.a - p.b))
        throw DomainError(
            "psi1.continuation: a - b must not be an integer");

    const real tol = cfg.target_rel_err;
    cplx pref1 = coeff_f(p.c, p.b, p.a) * cpow(-x, -p.a);
    cplx pref2 = coeff_f(p.c, p.a, p.b) * cpow(-x, -p.b);

    CompensatedSum s1, s2;
    cplx c1(1, 0), c2(1, 0);
    int quiet = 0;
    for (int k = 0; k < 4000; ++k) {
        cplx fk(static_cast<real>(k), 0);
        cplx t1 = c1 * pfq({-fk}, {p.cp}, y, cfg).value;
        cplx t2 = c2 * hyp1f1(p.a - p.b - fk, p.cp, y, cfg);
        s1.add(t1);
        s2.add(t2);

        cplx total = pref1 * s1.value() + pref2 * s2.value();
        real scale = std::abs(total);
        real step = std::abs(pref1 * t1) + std::abs(pref2 * t2);
        if (step <= tol * scale && k > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3)
            return {total, step, "psi1.continuation", k + 1, 0, 0.0L};

        c1 *= (p.a + fk) * (cplx(1, 0) - p.c + p.a + fk) /
              ((cplx(1, 0) - p.b + p.a + fk) * (fk + cplx(1, 0)) * x);
        c2 *= (p.b + fk) * (cplx(1, 0) - p.c + p.b + fk) /
              ((cplx(1, 0) - p.a + p.b + fk) * (fk + cplx(1, 0)) * x);
    }
    throw NoConvergence("psi1.continuation: term cap reached");
}

// Half-line integral with the Bessel kernel I_{c'-1}; valid for
// Psi1[X, Y] with Re(X) < 0 after the substitution x = -X, y^2 = Y x.
EvalResult psi1_bessel_integral(const Psi1Params& p, cplx X, cplx Y,
                                const EvalConfig& cfg) {
    cplx x = -X;
    if (x.real() <= 0)
        throw DomainError("psi1.bessel_integral: requires Re(x) < 0 for "
                          "the first argument");
    if (p.a.real() <= 0)
        throw DomainError("psi1.bessel_integral: requires Re(a) > 0");

    cplx y = std::sqrt(Y * x);
    cplx yox = y / x;
    if (yox.real() < 0) {
        y = -y;
        yox = -yox;
    }
    real ls = std::max(Y.real(), 0.0L);
    cplx pref = 2.0L * gamma_ratio({p.cp}, {p.a}) * cpow(x, -p.a) *
                cpow(yox, cplx(1, 0) - p.cp);
    cplx two_a_cp = 2.0L * p.a - p.cp;

    auto kernel = [&p, yox, two_a_cp, &cfg](cplx w, cplx expo) -> cplx {
        return cpow(w, two_a_cp) * hyp1f1(p.b, p.c, -w * w, cfg) *
               bessel_i_scaled(p.cp - cplx(1, 0), 2.0L * yox * w, cfg) *
               std::exp(expo);
    };

    real rho = std::abs(y) / std::sqrt(std::abs(x));
    QuadResult q;
    if (rho > 10.0L) {
        // Narrow Gaussian peak at w = y of width |sqrt(x)|; recentre so
        // the node ladder resolves it.  (w - y)^2 / x = v^2 exactly.
        cplx sx = std::sqrt(x);
        const real vmax = 8.5L;
        IntegrandSpec spec;
        spec.evaluator = [&, sx, y, Y, ls](real s) -> cplx {
            real v = -vmax + 2.0L * vmax * s;
            cplx w = y + sx * v;
            return (2.0L * vmax) * sx *
                   kernel(w, cplx(-v * v, 0) + (Y - cplx(ls, 0)));
        };
        q = integrate_unit_interval(spec, cfg);
    } else {
        IntegrandSpec spec;
        spec.decay = DecayClass::gaussian;
        spec.evaluator = [&, x, yox, Y, ls](real w) -> cplx {
            cplx cw(w, 0);
            cplx expo = -cw * cw / x + 2.0L * yox * cw - cplx(ls, 0);
            real lb = expo.real() +
                      std::abs(two_a_cp) * std::log(w + 1.0L);
            if (lb < -11300.0L) return cplx(0, 0);
            return kernel(cw, expo);
        };
        q = integrate_halfline(spec, cfg);
    }
    return {pref * q.value, std::abs(pref) * q.abs_err_est,
            "psi1.bessel_integral", 0, q.evals, ls};
}

} // namespace

EvalResult psi1_eval(const Psi1Params& p, cplx x, cplx y, Psi1Method method,
                     const EvalConfig& cfg) {
    check_lower_params(p);
    switch (method) {
    case Psi1Method::double_series:
        return psi1_double_series(p, x, y, cfg);
    case Psi1Method::f1f1_series:
        return psi1_f1f1_series(p, x, y, cfg);
    case Psi1Method::euler:
        return psi1_euler(p, x, y, cfg);
    case Psi1Method::laplace:
        return psi1_laplace(p, x, y, cfg);
    case Psi1Method::continuation:
        return psi1_continuation(p, x, y, cfg);
    case Psi1Method::bessel_integral:
        return psi1_bessel_integral(p, x, y, cfg);
    case Psi1Method::auto_select:
        break;
    }

    // Region dispatch.  One exception to the series-first rule: large
    // positive y needs the rescaled Laplace kernel, since the series in
    // x would overflow long before convergence.
    if (std::abs(x) <= 0.8L) {
        if (y.imag() == 0 && y.real() > 3000.0L && x.imag() == 0 &&
            p.a.real() > 0)
            return psi1_laplace(p, x, y, cfg);
        return psi1_double_series(p, x, y, cfg);
    }
    if (std::abs(x) > 1.2L && !(x.imag() == 0 && x.real() >= 0) &&
        !is_int(p.a - p.b))
        return psi1_continuation(p, x, y, cfg);
    if (p.a.real() > 0 && x.real() < 1.0L)
        return psi1_laplace(p, x, y, cfg);
    if (p.c.real() > p.b.real() && p.b.real() > 0 &&
        !(x.imag() == 0 && x.real() >= 1.0L))
        return psi1_euler(p, x, y, cfg);
    throw NoApplicableMethod("psi1: no method covers this (x, y) region");
}

EvalResult psi1_reference(const Psi1Params& p, cplx x, cplx y,
                          const EvalConfig& cfg) {
    return psi1_eval(p, x, y, Psi1Method::auto_select, cfg);
}

Psi1SmallX psi1_asym_small_x(const Psi1Params& p, cplx y, bool negative_x,
                             bool complete, const EvalConfig& cfg) {
    check_lower_params(p);
    if (complete) {
        if (p.c.real() <= p.b.real() || p.b.real() <= 0)
            throw DomainError("psi1_asym_small_x: complete variant needs "
                              "Re(c) > Re(b) > 0");
    } else if (p.a.real() <= 0) {
        throw DomainError("psi1_asym_small_x: leading form needs Re(a) > 0");
    }

    Psi1SmallX e;
    e.p = p;
    e.y = y;
    e.sign = negative_x ? -1 : 1;
    e.complete = complete;
    e.coeff_exp = gamma_ratio({p.cp}, {p.a}) *
                  hyp1f1(p.b, p.c, static_cast<real>(e.sign) * y, cfg);
    e.coeff_alg = complete ? gamma_ratio({p.cp}, {p.cp - p.a}) : cplx(0, 0);
    return e;
}

ExpansionResult Psi1SmallX::at(cplx x) const {
    cplx Y = y / x;
    real ls = std::max(Y.real(), 0.0L);

    ExpansionResult out;
    out.order = complete ? 2 : 1;
    out.log_scale = ls;
    out.validity = complete
        ? "x -> 0, y fixed, -pi <= arg(-y/x) <= pi"
        : "x -> 0, y > 0 fixed, |arg(x)| <= pi/2 - delta";

    cplx dominant =
        coeff_exp * cpow(Y, p.a - p.cp) * std::exp(Y - cplx(ls, 0));
    out.terms.push_back({dominant, p.a - p.cp, true});
    out.value = dominant;
    if (complete) {
        cplx algebraic = coeff_alg * cpow(-Y, -p.a) * std::exp(cplx(-ls, 0));
        out.terms.push_back({algebraic, -p.a, false});
        out.value += algebraic;
    }
    return out;
}

Psi1SmallY psi1_asym_small_y(const Psi1Params& p, cplx x, int order) {
    check_lower_params(p);
    if (order < 1)
        throw DomainError("psi1_asym_small_y: order >= 1 required");
    if (is_int(p.a - p.b))
        throw DomainError(
            "psi1_asym_small_y: a - b must not be an integer");

    Psi1SmallY e;
    e.p = p;
    e.x = x;
    e.order = order;
    e.pref1 = coeff_f(p.c, p.b, p.a);
    e.pref2 = coeff_f(p.c, p.a, p.b);
    e.a1.assign(order, cplx(0, 0));
    e.a2.assign(order, cplx(0, 0));

    for (int m = 0; m < order; ++m) {
        CompensatedSum s1, s2;
        for (int k = 0; k <= m; ++k) {
            long l = m - k;
            cplx fk(static_cast<real>(k), 0);
            cplx xk = cpow(x, -fk);
            cplx den = pochhammer(p.cp, l) * pochhammer(cplx(1, 0), l) *
                       pochhammer(cplx(1, 0), k);
            s1.add(pochhammer(-fk, l) * pochhammer(p.a, k) *
                   pochhammer(cplx(1, 0) - p.c + p.a, k) /
                   (den * pochhammer(cplx(1, 0) - p.b + p.a, k)) * xk);
            s2.add(pochhammer(p.a - p.b - fk, l) * pochhammer(p.b, k) *
                   pochhammer(cplx(1, 0) - p.c + p.b, k) /
                   (den * pochhammer(cplx(1, 0) - p.a + p.b, k)) * xk);
        }
        e.a1[m] = s1.value();
        e.a2[m] = s2.value();
    }
    return e;
}

ExpansionResult Psi1SmallY::at(cplx y) const {
    cplx u = -x / y;
    cplx s1(0, 0), s2(0, 0), ym(1, 0);
    for (int m = 0; m < order; ++m) {
        s1 += a1[static_cast<size_t>(m)] * ym;
        s2 += a2[static_cast<size_t>(m)] * ym;
        ym *= y;
    }
    cplx t1 = pref1 * cpow(u, -p.a) * s1;
    cplx t2 = pref2 * cpow(u, -p.b) * s2;

    ExpansionResult out;
    out.order = order;
    out.validity = "y -> 0, x fixed, |arg(-x/y)| < pi, a - b not integer";
    out.terms.push_back({t1, -p.a, false});
    out.terms.push_back({t2, -p.b, false});
    out.value = t1 + t2;
    return out;
}

} // namespace humbert
