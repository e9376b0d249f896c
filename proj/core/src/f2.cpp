#include "humbert/f2.hpp"

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/psi1.hpp"
#include "humbert/psi2.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"

namespace humbert {

namespace {

bool is_int(cplx z) {
    return z.imag() == 0 &&
           std::abs(z.real() - std::round(z.real())) < 1e-12L;
}

void check_lower_params(const F2Params& p) {
    if (is_nonpos_int(p.c))
        throw ParameterPole("f2: c at a nonpositive integer");
    if (is_nonpos_int(p.cp))
        throw ParameterPole("f2: c' at a nonpositive integer");
}

EvalResult f2_double_series(const F2Params& p, cplx x, cplx y,
                            const EvalConfig& cfg) {
    if (std::abs(x) + std::abs(y) >= 1.0L)
        throw DomainError("f2.double_series: requires |x| + |y| < 1");
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
            next[m] = diag[m] * ad1 * (p.bp + n - cplx(1, 0)) * y /
                      ((p.cp + n - cplx(1, 0)) * n);
        }
        cplx md(static_cast<real>(d), 0);
        next[d] = diag[d - 1] * ad1 * (p.b + md - cplx(1, 0)) * x /
                  ((p.c + md - cplx(1, 0)) * md);

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
            return {acc.value(), std::abs(dm), "f2.double_series", d + 1, 0,
                    0.0L};
    }
    throw NoConvergence("f2.double_series: diagonal cap reached");
}

EvalResult f2_laplace(const F2Params& p, cplx x, cplx y,
                      const EvalConfig& cfg) {
    if (p.a.real() <= 0)
        throw DomainError("f2.laplace: requires Re(a) > 0");
    if ((x + y).real() >= 1.0L)
        throw DomainError("f2.laplace: requires Re(x + y) < 1");
    cplx pref = gamma_ratio({}, {p.a});
    IntegrandSpec spec;
    spec.alpha = p.a;
    spec.evaluator = [&p, x, y, &cfg](real t) -> cplx {
        // log-magnitude bound; beyond it the tail is unrepresentable
        real lb = -t + std::max(x.real(), 0.0L) * t +
                  std::max(y.real(), 0.0L) * t +
                  (p.a.real() - 1.0L) * std::log(t);
        if (lb < -11300.0L) return cplx(0, 0);
        cplx xt = x * t, yt = y * t;
        real rescale = std::max(xt.real(), 0.0L) + std::max(yt.real(), 0.0L);
        return std::exp((p.a - cplx(1, 0)) * std::log(t) - t +
                        cplx(rescale, 0)) *
               hyp1f1_scaled(p.b, p.c, xt, cfg) *
               hyp1f1_scaled(p.bp, p.cp, yt, cfg);
    };
    QuadResult q = integrate_halfline(spec, cfg);
    return {pref * q.value, std::abs(pref) * q.abs_err_est, "f2.laplace", 0,
            q.evals, 0.0L};
}

EvalResult f2_jaeger(const F2Params& p, cplx x, cplx y,
                     const EvalConfig& cfg) {
    if (std::abs(y) >= 1.0L || std::abs(x) <= std::abs(y) + 1.0L)
        throw DomainError(
            "f2.jaeger: requires |y| < 1 and |x| > |y| + 1");
    if (x.imag() == 0 && x.real() >= 0)
        throw BranchCutError("f2.jaeger: x on the positive real axis");
    if (is_int(p.a - p.b))
        throw DomainError("f2.jaeger: a - b must not be an integer");

    const real tol = cfg.target_rel_err;
    cplx pref1 = coeff_f(p.c, p.b, p.a) * cpow(-x, -p.a);
    cplx pref2 = coeff_f(p.c, p.a, p.b) * cpow(-x, -p.b);

    CompensatedSum s1, s2;
    cplx c1(1, 0), c2(1, 0);
    int quiet = 0;
    for (int n = 0; n < 4000; ++n) {
        cplx fn(static_cast<real>(n), 0);
        cplx t1 = c1 * pfq({-fn, p.bp}, {p.cp}, y, cfg).value;
        cplx t2 = c2 * pfq({p.a - p.b - fn, p.bp}, {p.cp}, y, cfg).value;
        s1.add(t1);
        s2.add(t2);

        cplx total = pref1 * s1.value() + pref2 * s2.value();
        real scale = std::abs(total);
        real step = std::abs(pref1 * t1) + std::abs(pref2 * t2);
        if (step <= tol * scale && n > 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3)
            return {total, step, "f2.jaeger", n + 1, 0, 0.0L};

        c1 *= (p.a + fn) * (cplx(1, 0) - p.c + p.a + fn) /
              ((cplx(1, 0) - p.b + p.a + fn) * (fn + cplx(1, 0)) * x);
        c2 *= (p.b + fn) * (cplx(1, 0) - p.c + p.b + fn) /
              ((cplx(1, 0) - p.a + p.b + fn) * (fn + cplx(1, 0)) * x);
    }
    throw NoConvergence("f2.jaeger: term cap reached");
}

} // namespace

EvalResult f2_eval(const F2Params& p, cplx x, cplx y, F2Method method,
                   const EvalConfig& cfg) {
    check_lower_params(p);
    switch (method) {
    case F2Method::double_series:
        return f2_double_series(p, x, y, cfg);
    case F2Method::laplace:
        return f2_laplace(p, x, y, cfg);
    case F2Method::jaeger:
        return f2_jaeger(p, x, y, cfg);
    case F2Method::auto_select:
        break;
    }

    if (std::abs(x) + std::abs(y) <= 0.9L)
        return f2_double_series(p, x, y, cfg);
    if (std::abs(y) < 1.0L && std::abs(x) > std::abs(y) + 1.05L &&
        !(x.imag() == 0 && x.real() >= 0) && !is_int(p.a - p.b))
        return f2_jaeger(p, x, y, cfg);
    if (p.a.real() > 0 && (x + y).real() < 1.0L)
        return f2_laplace(p, x, y, cfg);
    throw NoApplicableMethod("f2: no method covers this (x, y) region");
}

EvalResult f2_reference(const F2Params& p, cplx x, cplx y,
                        const EvalConfig& cfg) {
    return f2_eval(p, x, y, F2Method::auto_select, cfg);
}

F2SmallY f2_asym_small_y(const F2Params& p, cplx x, int order) {
    check_lower_params(p);
    if (order < 1)
        throw DomainError("f2_asym_small_y: order >= 1 required");
    if (is_int(p.a - p.b))
        throw DomainError("f2_asym_small_y: a - b must not be an integer");

    F2SmallY e;
    e.p = p;
    e.x = x;
    e.order = order;
    e.pref1 = coeff_f(p.c, p.b, p.a);
    e.pref2 = coeff_f(p.c, p.a, p.b);
    e.c1.assign(static_cast<size_t>(order), cplx(0, 0));
    e.c2.assign(static_cast<size_t>(order), cplx(0, 0));

    for (int m = 0; m < order; ++m) {
        CompensatedSum s1, s2;
        for (int k = 0; k <= m; ++k) {
            long l = m - k;
            cplx fk(static_cast<real>(k), 0);
            cplx xk = cpow(x, -fk);
            cplx den = pochhammer(p.cp, l) * pochhammer(cplx(1, 0), l) *
                       pochhammer(cplx(1, 0), k);
            cplx wl = pochhammer(p.bp, l);
            s1.add(wl * pochhammer(-fk, l) * pochhammer(p.a, k) *
                   pochhammer(cplx(1, 0) - p.c + p.a, k) /
                   (den * pochhammer(cplx(1, 0) - p.b + p.a, k)) * xk);
            s2.add(wl * pochhammer(p.a - p.b - fk, l) * pochhammer(p.b, k) *
                   pochhammer(cplx(1, 0) - p.c + p.b, k) /
                   (den * pochhammer(cplx(1, 0) - p.a + p.b, k)) * xk);
        }
        e.c1[static_cast<size_t>(m)] = s1.value();
        e.c2[static_cast<size_t>(m)] = s2.value();
    }
    return e;
}

ExpansionResult F2SmallY::at(cplx y) const {
    cplx u = -x / y;
    cplx s1(0, 0), s2(0, 0), ym(1, 0);
    for (int m = 0; m < order; ++m) {
        s1 += c1[static_cast<size_t>(m)] * ym;
        s2 += c2[static_cast<size_t>(m)] * ym;
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

ConfluencePair confluence_limit(ConfluenceTarget target, const F2Params& p,
                                cplx x, cplx y, real eps,
                                const EvalConfig& cfg) {
    if (eps <= 0 || eps > 0.1L)
        throw DomainError("confluence_limit: eps must lie in (0, 0.1]");
    cplx inv_eps(1.0L / eps, 0);

    ConfluencePair out;
    switch (target) {
    case ConfluenceTarget::psi1_from_f2:
        out.limit_side = f2_reference({p.a, p.b, inv_eps, p.c, p.cp}, x,
                                      eps * y, cfg);
        out.target_side =
            psi1_reference({p.a, p.b, p.c, p.cp}, x, y, cfg);
        break;
    case ConfluenceTarget::psi2_from_f2:
        out.limit_side = f2_reference({p.a, inv_eps, inv_eps, p.c, p.cp},
                                      eps * x, eps * y, cfg);
        out.target_side = psi2_reference({p.a, p.c, p.cp}, x, y, cfg);
        break;
    case ConfluenceTarget::psi2_from_psi1:
        out.limit_side = psi1_reference({p.a, inv_eps, p.c, p.cp}, eps * x,
                                        y, cfg);
        out.target_side = psi2_reference({p.a, p.c, p.cp}, x, y, cfg);
        break;
    }
    out.abs_difference =
        std::abs(out.limit_side.scaled() - out.target_side.scaled());
    return out;
}

} // namespace humbert
