#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include "humbert/errors.hpp"
#include "humbert/f2.hpp"
#include "humbert/gamma.hpp"
#include "humbert/psi1.hpp"
#include "humbert/psi2.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"
#include "humbert/verify.hpp"

namespace humbert {

namespace {

constexpr real INF = std::numeric_limits<real>::infinity();

std::string num(real v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9Lg", v);
    return buf;
}

std::string num(cplx v) {
    if (v.imag() == 0) return num(v.real());
    return num(v.real()) + "+" + num(v.imag()) + "i";
}

CheckRow make_row(std::string suite, std::string check, std::string pjson,
                  std::string grid, real measured, real lo, real hi) {
    CheckRow r;
    r.suite = std::move(suite);
    r.check = std::move(check);
    r.param_json = std::move(pjson);
    r.grid_point = std::move(grid);
    r.measured = measured;
    r.expected_lo = lo;
    r.expected_hi = hi;
    r.pass = std::isfinite((double)measured) && measured >= lo && measured <= hi;
    return r;
}

real log_abs(const EvalResult& r) {
    return std::log(std::abs(r.value)) + r.log_scale;
}

real log_abs(const ExpansionResult& r) {
    return std::log(std::abs(r.value)) + r.log_scale;
}

real u01(std::mt19937& g) {
    return static_cast<real>(g()) / 4294967296.0L;
}

// ---------------------------------------------------------------- henkel

std::vector<CheckRow> suite_henkel(const HarnessOptions& opt) {
    const std::string pj = R"({"a":1,"b":0.5,"c":1.5,"cp":0.5})";
    Psi1Params p{cplx(1, 0), cplx(0.5L, 0), cplx(1.5L, 0), cplx(0.5L, 0)};
    std::vector<CheckRow> rows;

    for (real xi : opt.henkel_xi) {
        cplx limit = std::sqrt(PI / 2) * xi *
                     hyp1f1(cplx(0.5L, 0), cplx(1.5L, 0),
                            cplx(-xi * xi / 2, 0), opt.cfg);
        std::vector<real> devs;
        for (real z : opt.henkel_z) {
            real y = xi * xi / (2 * z);
            EvalResult r = psi1_eval(p, cplx(-z, 0), cplx(y, 0),
                                     Psi1Method::laplace, opt.cfg);
            cplx scaled = r.value * std::exp(cplx(r.log_scale - y, 0));
            real dev = std::abs(scaled * std::sqrt(z) - limit);
            devs.push_back(dev);
            bool last = (z == opt.henkel_z.back());
            rows.push_back(make_row("henkel", "dev", pj,
                                    "xi=" + num(xi) + ";z=" + num(z), dev, 0,
                                    last ? 1e-3L : 1.0L));
        }
        for (size_t k = 1; k < devs.size(); ++k)
            rows.push_back(make_row(
                "henkel", "monotone", pj,
                "xi=" + num(xi) + ";z=" + num(opt.henkel_z[k]),
                devs[k] / devs[k - 1], 0, 0.999999L));
    }
    return rows;
}

// --------------------------------------------------------------- glauber

std::vector<CheckRow> suite_glauber(const HarnessOptions& opt) {
    const std::string pj = R"({"a":1,"b":0.5,"c":1.5,"cp":0.5})";
    Psi1Params p{cplx(1, 0), cplx(0.5L, 0), cplx(1.5L, 0), cplx(0.5L, 0)};
    std::vector<CheckRow> rows;
    const real xs[] = {1e2L, 1e3L, 1e4L, 1e5L, 1e6L};

    std::map<real, std::vector<real>> by_x;
    for (real y : {0.5L, 1.0L, 2.0L}) {
        for (real x : xs) {
            EvalResult r =
                psi1_reference(p, cplx(-x, 0), cplx(y / x, 0), opt.cfg);
            cplx val = r.scaled();
            if (x == 1e6L)
                rows.push_back(make_row(
                    "glauber", "limit", pj, "y=" + num(y) + ";x=" + num(x),
                    std::abs(val * std::sqrt(x) - PI / 2), 0, 1e-3L));
            cplx res = val - (PI / 2) / std::sqrt(x) + 1.0L / x;
            real scaled_res = std::abs(res) * std::pow(x, 1.5L);
            by_x[x].push_back(scaled_res);
            rows.push_back(make_row("glauber", "residual", pj,
                                    "y=" + num(y) + ";x=" + num(x),
                                    scaled_res, 0, 4.0L));
        }
    }
    // y-independence of the two leading terms: the residual spread over
    // y stays within a small multiple of any single-y residual.
    for (const auto& [x, resids] : by_x) {
        real lo = *std::min_element(resids.begin(), resids.end());
        real hi = *std::max_element(resids.begin(), resids.end());
        rows.push_back(make_row("glauber", "y_spread", pj, "x=" + num(x),
                                hi / lo, 0, 5.0L));
    }
    return rows;
}

// ----------------------------------------------------------------- saran

std::vector<CheckRow> suite_saran(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.8,"c":1.2,"cp":1.1})";
    Psi2Params p{cplx(0.8L, 0), cplx(1.2L, 0), cplx(1.1L, 0)};
    std::vector<CheckRow> rows;
    const cplx one(1, 0);

    std::vector<real> devs, lts, ldiffs;
    for (real t : {20.0L, 40.0L, 80.0L}) {
        EvalResult ref = psi2_eval(p, cplx(t, 0), cplx(t, 0),
                                   Psi2Method::kummer_series, opt.cfg);
        ExpansionResult ex = psi2_asym_right(p, one, one, t);
        real d = std::abs(log_abs(ref) - log_abs(ex));
        devs.push_back(d);
        lts.push_back(std::log(t));
        ldiffs.push_back(log_abs(ref) - log_abs(ex));
        rows.push_back(
            make_row("saran", "logdev", pj, "t=" + num(t), d, 0, 1.0L));
    }
    for (size_t k = 1; k < devs.size(); ++k)
        rows.push_back(make_row("saran", "logdev_decreasing", pj,
                                "step=" + num((real)k),
                                devs[k] / devs[k - 1], 0, 0.999999L));
    rows.push_back(make_row("saran", "full_form_slope", pj, "t=20..80",
                            fit_slope(lts, ldiffs), -0.1L, 0.1L));

    // Slope of log(|Psi2(t,t)| e^{-4t}) in log t isolates the power of t
    // that a bare exponential-only model misses.
    std::vector<real> lt, lv;
    for (real t : {20.0L, 40.0L, 80.0L, 160.0L}) {
        EvalResult ref = psi2_eval(p, cplx(t, 0), cplx(t, 0),
                                   Psi2Method::kummer_series, opt.cfg);
        lt.push_back(std::log(t));
        lv.push_back(log_abs(ref) - 4 * t);
    }
    rows.push_back(make_row("saran", "prefactor_slope", pj, "t=20..160",
                            fit_slope(lt, lv), -1.15L, -0.85L));
    return rows;
}

// ------------------------------------------------------------ cross-psi1

void cross_point(std::vector<CheckRow>& rows, const std::string& suite,
                 const std::string& pj, const std::string& grid,
                 const std::vector<std::pair<std::string, std::function<EvalResult()>>>& evals,
                 real tol) {
    std::vector<std::pair<std::string, EvalResult>> ok;
    for (const auto& [name, fn] : evals) {
        try {
            ok.emplace_back(name, fn());
        } catch (const EvalError&) {
            rows.push_back(
                make_row(suite, "error:" + name, pj, grid, INF, 0, tol));
        }
    }
    if (ok.size() < 2)
        throw EmptyOverlap(suite + ": fewer than two methods at " + grid);
    for (size_t i = 0; i < ok.size(); ++i)
        for (size_t j = i + 1; j < ok.size(); ++j)
            rows.push_back(make_row(
                suite, ok[i].first + "|" + ok[j].first, pj, grid,
                rel_diff(ok[i].second, ok[j].second), 0, tol));
}

std::vector<CheckRow> suite_cross_psi1(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.7,"b":1.3,"c":1.9,"cp":0.8})";
    Psi1Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    std::vector<CheckRow> rows;
    std::mt19937 gen(opt.seed);

    auto ev = [&](cplx x, cplx y, Psi1Method m) {
        return [&p, x, y, m, &opt] { return psi1_eval(p, x, y, m, opt.cfg); };
    };

    for (int i = 0; i < 10; ++i) {
        cplx x(u01(gen) * 1.4L - 0.7L, 0);
        cplx y(u01(gen) * 6.0L - 3.0L, 0);
        cross_point(rows, "cross-psi1", pj,
                    "x=" + num(x) + ";y=" + num(y),
                    {{"series", ev(x, y, Psi1Method::double_series)},
                     {"f1f1", ev(x, y, Psi1Method::f1f1_series)},
                     {"euler", ev(x, y, Psi1Method::euler)},
                     {"laplace", ev(x, y, Psi1Method::laplace)}},
                    1e-8L);
    }
    for (int i = 0; i < 10; ++i) {
        cplx x(-(2.0L + u01(gen) * 48.0L), 0);
        cplx y(u01(gen) * 4.0L - 2.0L, 0);
        std::vector<std::pair<std::string, std::function<EvalResult()>>> evals{
            {"continuation", ev(x, y, Psi1Method::continuation)},
            {"laplace", ev(x, y, Psi1Method::laplace)},
            {"euler", ev(x, y, Psi1Method::euler)}};
        if (y.real() > 0.05L)
            evals.emplace_back("bessel", ev(x, y, Psi1Method::bessel_integral));
        cross_point(rows, "cross-psi1", pj, "x=" + num(x) + ";y=" + num(y),
                    evals, 1e-8L);
    }

    // Fixed grid on the negative axis: continuation against the Laplace
    // integral, 12 points.
    for (real x : {-2.0L, -5.85L, -17.1L, -50.0L})
        for (real y : {-2.0L, 0.5L, 2.0L}) {
            cplx cx(x, 0), cy(y, 0);
            EvalResult a =
                psi1_eval(p, cx, cy, Psi1Method::continuation, opt.cfg);
            EvalResult b = psi1_eval(p, cx, cy, Psi1Method::laplace, opt.cfg);
            rows.push_back(make_row("cross-psi1", "grid:continuation|laplace",
                                    pj,
                                    "x=" + num(x) + ";y=" + num(y),
                                    rel_diff(a, b), 0, 1e-8L));
        }
    return rows;
}

// ------------------------------------------------------------ cross-psi2

std::vector<CheckRow> suite_cross_psi2(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.7,"c":1.3,"cp":0.9})";
    Psi2Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(0.9L, 0)};
    std::vector<CheckRow> rows;

    auto ev = [&](cplx x, cplx y, Psi2Method m) {
        return [&p, x, y, m, &opt] { return psi2_eval(p, x, y, m, opt.cfg); };
    };

    // Points stay inside the window where the alternating series keep
    // their cancellation noise below the 1e-8 bar; the row-sum form
    // loses precision fastest and joins only at the mildest points.
    const std::pair<real, real> pts[] = {
        {0.3L, -0.5L}, {0.8L, -1.0L}, {1.5L, -2.0L},  {-0.5L, -3.0L},
        {-1.5L, -5.0L}, {2.5L, -6.0L}, {0.1L, -12.0L}, {1.0L, -15.0L},
        {-2.0L, -0.8L}, {3.0L, -4.0L}};
    for (auto [xr, yr] : pts) {
        cplx x(xr, 0), y(yr, 0);
        std::vector<std::pair<std::string, std::function<EvalResult()>>>
            methods{{"mb", ev(x, y, Psi2Method::mb_integral)},
                    {"series", ev(x, y, Psi2Method::double_series)}};
        if (std::fabs(yr) <= 5.0L && xr <= 1.5L)
            methods.push_back({"f1f1", ev(x, y, Psi2Method::f1f1_series)});
        cross_point(rows, "cross-psi2", pj, "x=" + num(xr) + ";y=" + num(yr),
                    methods, 1e-8L);
    }

    Psi2Params ps{p.a, p.cp, p.c};
    EvalResult u = psi2_reference(p, cplx(0.7L, 0), cplx(-1.2L, 0), opt.cfg);
    EvalResult v = psi2_reference(ps, cplx(-1.2L, 0), cplx(0.7L, 0), opt.cfg);
    rows.push_back(make_row("cross-psi2", "symmetry", pj, "x=0.7;y=-1.2",
                            rel_diff(u, v), 0, 1e-10L));
    return rows;
}

// -------------------------------------------------------------- cross-f2

std::vector<CheckRow> suite_cross_f2(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.9,"b":0.6,"bp":0.4,"c":1.4,"cp":1.2})";
    F2Params p{cplx(0.9L, 0), cplx(0.6L, 0), cplx(0.4L, 0), cplx(1.4L, 0),
               cplx(1.2L, 0)};
    std::vector<CheckRow> rows;

    auto pair_row = [&](cplx x, cplx y, F2Method m1, const char* n1,
                        F2Method m2, const char* n2) {
        EvalResult a = f2_eval(p, x, y, m1, opt.cfg);
        EvalResult b = f2_eval(p, x, y, m2, opt.cfg);
        rows.push_back(make_row("cross-f2",
                                std::string(n1) + "|" + n2, pj,
                                "x=" + num(x) + ";y=" + num(y),
                                rel_diff(a, b), 0, 1e-8L));
    };

    const std::pair<real, real> small_pts[] = {
        {0.2L, 0.3L}, {-0.3L, 0.4L}, {0.35L, -0.25L}, {0.1L, 0.15L}};
    for (auto [x, y] : small_pts)
        pair_row(cplx(x, 0), cplx(y, 0), F2Method::double_series, "series",
                 F2Method::laplace, "laplace");

    const std::pair<real, real> jaeger_pts[] = {{-20.0L, 0.3L},
                                                {-5.0L, 0.5L},
                                                {-8.0L, -0.4L},
                                                {-30.0L, 0.7L},
                                                {-3.5L, 0.2L}};
    for (auto [x, y] : jaeger_pts)
        pair_row(cplx(x, 0), cplx(y, 0), F2Method::jaeger, "jaeger",
                 F2Method::laplace, "laplace");

    F2Params ps{p.a, p.bp, p.b, p.cp, p.c};
    EvalResult u = f2_reference(p, cplx(0.2L, 0), cplx(0.3L, 0), opt.cfg);
    EvalResult v = f2_reference(ps, cplx(0.3L, 0), cplx(0.2L, 0), opt.cfg);
    rows.push_back(make_row("cross-f2", "symmetry", pj, "x=0.2;y=0.3",
                            rel_diff(u, v), 0, 1e-10L));
    return rows;
}

// ---------------------------------------------------------- decay suites

// Common shape: truncate at order N, measure |reference - expansion| on a
// doubling/halving ladder of the expansion variable, fit the decay
// exponent.  `sign` is +1 when the error scales like v^order (v -> 0)
// and -1 when it scales like v^-order (v -> inf).
std::vector<CheckRow> decay_rows(
    const std::string& suite, const std::string& pj, const char* varname,
    const std::vector<real>& grid, int sign, real slope_target,
    real slope_tol, const std::function<real(real, int)>& err_at) {
    std::vector<CheckRow> rows;
    for (int N : {1, 3}) {
        std::vector<real> lx, le;
        for (real v : grid) {
            real e = err_at(v, N);
            rows.push_back(make_row(suite, "err:N=" + num((real)N), pj,
                                    std::string(varname) + "=" + num(v), e,
                                    0, INF));
            lx.push_back(std::log(v));
            le.push_back(std::log(e));
        }
        real target = slope_target + N;
        rows.push_back(make_row(suite, "slope:N=" + num((real)N), pj,
                                std::string(varname) + "-ladder",
                                sign * fit_slope(lx, le), target - slope_tol,
                                target + slope_tol));
    }
    return rows;
}

std::vector<CheckRow> suite_decay_psi1_smally(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.7,"b":1.3,"c":1.9,"cp":0.8,"x":-2})";
    Psi1Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    const cplx x(-2, 0);
    return decay_rows(
        "decay-psi1-smally", pj, "y", {0.1L, 0.05L, 0.025L, 0.0125L}, +1,
        0.7L, opt.slope_tol, [&](real y, int N) {
            Psi1SmallY ex = psi1_asym_small_y(p, x, N);
            EvalResult ref = psi1_eval(p, x / y, cplx(y, 0),
                                       Psi1Method::continuation, opt.cfg);
            return std::abs(ref.value - ex.at(cplx(y, 0)).value);
        });
}

std::vector<CheckRow> suite_decay_psi2_left(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.7,"c":1.3,"cp":0.9,"x":0.5})";
    Psi2Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(0.9L, 0)};
    const cplx x(0.5L, 0);
    return decay_rows(
        "decay-psi2-left", pj, "|y|", {50.0L, 100.0L, 200.0L, 400.0L}, -1,
        0.7L, opt.slope_tol, [&](real m, int N) {
            Psi2AsymLeft ex = psi2_asym_left(p, x, N);
            EvalResult ref = psi2_eval(p, x, cplx(-m, 0),
                                       Psi2Method::mb_integral, opt.cfg);
            return std::abs(ref.value - ex.at(cplx(-m, 0)).value);
        });
}

std::vector<CheckRow> suite_decay_psi2_beta(const HarnessOptions& opt) {
    const std::string pj = R"({"a":0.8,"c":1.3,"cp":1.1,"beta":1})";
    Psi2Params p{cplx(0.8L, 0), cplx(1.3L, 0), cplx(1.1L, 0)};
    const real theta = PI - 0.05L;
    return decay_rows(
        "decay-psi2-beta", pj, "|x|", {200.0L, 400.0L, 800.0L, 1600.0L}, -1,
        0.8L, opt.slope_tol, [&](real R, int N) {
            cplx x = R * std::exp(cplx(0, theta));
            Psi2AsymBeta ex = psi2_asym_beta(p, cplx(1, 0), N, opt.cfg);
            EvalResult ref = psi2_eval(p, x, cplx(1, 0) / x,
                                       Psi2Method::f1f1_series, opt.cfg);
            return std::abs(ref.value - ex.at(x).value);
        });
}

std::vector<CheckRow> suite_decay_f2_smally(const HarnessOptions& opt) {
    const std::string pj =
        R"({"a":0.7,"b":1.3,"bp":0.5,"c":1.9,"cp":0.8,"x":-2})";
    F2Params p{cplx(0.7L, 0), cplx(1.3L, 0), cplx(0.5L, 0), cplx(1.9L, 0),
               cplx(0.8L, 0)};
    const cplx x(-2, 0);
    return decay_rows(
        "decay-f2-smally", pj, "y", {0.1L, 0.05L, 0.025L, 0.0125L}, +1,
        0.7L, opt.slope_tol, [&](real y, int N) {
            F2SmallY ex = f2_asym_small_y(p, x, N);
            EvalResult ref =
                f2_eval(p, x / y, cplx(y, 0), F2Method::jaeger, opt.cfg);
            return std::abs(ref.value - ex.at(cplx(y, 0)).value);
        });
}

// ------------------------------------------------------------ uniform-2f2

std::vector<CheckRow> suite_uniform_2f2(const HarnessOptions& opt) {
    const std::string pj =
        R"({"a":0.5,"b":0.9,"c":1.3,"d":1.1,"z":40,"w":4.4})";
    const cplx a(0.5L, 0), b(0.9L, 0), c(1.3L, 0), d(1.1L, 0);
    const real z = 40.0L, w = 4.4L;
    std::vector<CheckRow> rows;

    for (int n : {0, 1, 5, 10}) {
        Uniform2F2 u = uniform_2f2(a, b, c, d, n, w, cplx(z, 0));
        real direct = pfq_dd({0.5L, 0.9L - n}, {1.3L, 1.1L}, -z, 4000);
        real miss = std::abs(cplx(direct, 0) - u.value);
        rows.push_back(make_row("uniform-2f2", "envelope", pj,
                                "n=" + num((real)n), miss / u.envelope, 0,
                                opt.envelope_mult));
    }

    Uniform2F2 u2 = uniform_2f2(a, b, c, d, 2, w, cplx(z, 0));
    Uniform2F2 u6 = uniform_2f2(a, b, c, d, 6, w, cplx(z, 0));
    rows.push_back(make_row("uniform-2f2", "lambda_scaling", pj, "n=2,6",
                            u2.envelope_raw / u6.envelope_raw, 3.9999L,
                            4.0001L));

    int mismatches = 0;
    for (int n = 1; n <= 40; ++n)
        if (lambda_n(n) != lambda_n_min_form(n)) ++mismatches;
    rows.push_back(make_row("uniform-2f2", "lambda_closed_form", pj,
                            "n=1..40", (real)mismatches, 0, 0));
    return rows;
}

// ------------------------------------------------------------- confluence

std::vector<CheckRow> suite_confluence(const HarnessOptions& opt) {
    const std::string pj =
        R"({"a":0.9,"b":0.6,"bp":0.4,"c":1.4,"cp":1.2,"x":0.3,"y":0.4})";
    F2Params p{cplx(0.9L, 0), cplx(0.6L, 0), cplx(0.4L, 0), cplx(1.4L, 0),
               cplx(1.2L, 0)};
    const cplx x(0.3L, 0), y(0.4L, 0);
    std::vector<CheckRow> rows;

    const std::pair<ConfluenceTarget, const char*> targets[] = {
        {ConfluenceTarget::psi1_from_f2, "psi1_from_f2"},
        {ConfluenceTarget::psi2_from_f2, "psi2_from_f2"},
        {ConfluenceTarget::psi2_from_psi1, "psi2_from_psi1"}};
    for (auto [t, name] : targets) {
        real d1 = confluence_limit(t, p, x, y, 1e-3L, opt.cfg).abs_difference;
        real d2 = confluence_limit(t, p, x, y, 5e-4L, opt.cfg).abs_difference;
        rows.push_back(make_row("confluence", std::string("diff:") + name,
                                pj, "eps=0.001", d1, 0, 0.1L));
        rows.push_back(make_row("confluence", std::string("ratio:") + name,
                                pj, "eps=0.001/0.0005", d1 / d2, 1.5L,
                                3.0L));
    }
    return rows;
}

using SuiteFn = std::vector<CheckRow> (*)(const HarnessOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"henkel", suite_henkel},
        {"glauber", suite_glauber},
        {"saran", suite_saran},
        {"cross-psi1", suite_cross_psi1},
        {"cross-psi2", suite_cross_psi2},
        {"cross-f2", suite_cross_f2},
        {"decay-psi1-smally", suite_decay_psi1_smally},
        {"decay-psi2-left", suite_decay_psi2_left},
        {"decay-psi2-beta", suite_decay_psi2_beta},
        {"decay-f2-smally", suite_decay_f2_smally},
        {"uniform-2f2", suite_uniform_2f2},
        {"confluence", suite_confluence}};
    return reg;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name,
                             const HarnessOptions& opt) {
    for (const auto& [sname, fn] : registry()) {
        if (sname != name) continue;
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.suite = name;
        rep.rows = fn(opt);
        rep.runtime_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          t0)
                .count();
        return rep;
    }
    throw DomainError("run_suite: unknown suite '" + name + "'");
}

} // namespace humbert
