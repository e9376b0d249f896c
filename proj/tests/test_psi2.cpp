#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/psi2.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"
#include "humbert/verify.hpp"

using namespace humbert;

namespace {
const Psi2Params P{cplx(0.7L, 0), cplx(1.3L, 0), cplx(0.9L, 0)};

double rel(cplx got, cplx want) {
    return (double)(std::abs(got - want) /
                    std::max<real>(std::abs(want), 1e-300L));
}
} // namespace

TEST_CASE("collapses to 1F1 on either axis") {
    cplx y(2.5L, 0);
    CHECK(rel(psi2_eval(P, cplx(0, 0), y).value, hyp1f1(P.a, P.cp, y)) <
          1e-13);
    cplx x(1.7L, 0);
    CHECK(rel(psi2_eval(P, x, cplx(0, 0)).value, hyp1f1(P.a, P.c, x)) <
          1e-13);
}

TEST_CASE("methods agree on frozen values") {
    const cplx want_neg(0.217977400397370404946834389344L, 0);
    for (Psi2Method m : {Psi2Method::f1f1_series, Psi2Method::double_series,
                         Psi2Method::mb_integral})
        CHECK(rel(psi2_eval(P, cplx(0.5L, 0), cplx(-2, 0), m).value,
                  want_neg) < 1e-11);

    const cplx want_pos(33.8175047986421926172812223984L, 0);
    EvalResult f = psi2_eval(P, cplx(3, 0), cplx(0.5L, 0),
                             Psi2Method::f1f1_series);
    EvalResult k = psi2_eval(P, cplx(3, 0), cplx(0.5L, 0),
                             Psi2Method::kummer_series);
    CHECK(rel(f.value, want_pos) < 1e-12);
    CHECK(rel(k.scaled(), want_pos) < 1e-12);
    CHECK(k.log_scale == doctest::Approx(3.0));
    CHECK((double)rel_diff(f, k) < 1e-12);
}

TEST_CASE("symmetric under (c,x) <-> (c',y)") {
    Psi2Params S{P.a, P.cp, P.c};
    EvalResult u = psi2_reference(P, cplx(0.7L, 0), cplx(-1.2L, 0));
    EvalResult v = psi2_reference(S, cplx(-1.2L, 0), cplx(0.7L, 0));
    CHECK((double)rel_diff(u, v) < 1e-12);
}

TEST_CASE("mb integral respects its sector") {
    CHECK_THROWS_AS(psi2_eval(P, cplx(0.5L, 0), cplx(2, 0),
                              Psi2Method::mb_integral),
                    DomainError);
}

TEST_CASE("large negative-y expansion") {
    Psi2AsymLeft e = psi2_asym_left(P, cplx(0.5L, 0), 6);
    CHECK(!e.identically_zero);
    EvalResult ref = psi2_eval(P, cplx(0.5L, 0), cplx(-200, 0),
                               Psi2Method::mb_integral);
    CHECK(rel(e.at(cplx(-200, 0)).value, ref.value) < 1e-9);

    // Gamma(c'-a) pole kills every coefficient
    Psi2Params Z{cplx(1.9L, 0), P.c, cplx(0.9L, 0)};
    Psi2AsymLeft z = psi2_asym_left(Z, cplx(0.5L, 0), 3);
    CHECK(z.identically_zero);
    CHECK(std::abs(z.at(cplx(-50, 0)).value) == 0.0L);
}

TEST_CASE("right-plane exponential form") {
    // t = 1: the exponent is x + y + 2 sqrt(xy)
    ExpansionResult e =
        psi2_asym_right(P, cplx(1, 0), cplx(1, 0), 1.0L);
    CHECK(e.log_scale == doctest::Approx(4.0));

    // Truncation quality improves with t
    Psi2Params Q{cplx(0.8L, 0), cplx(1.2L, 0), cplx(1.1L, 0)};
    auto logdev = [&](real t) {
        EvalResult ref = psi2_eval(Q, cplx(t, 0), cplx(t, 0),
                                   Psi2Method::kummer_series);
        ExpansionResult ex =
            psi2_asym_right(Q, cplx(1, 0), cplx(1, 0), t);
        return std::abs((std::log(std::abs(ref.value)) + ref.log_scale) -
                        (std::log(std::abs(ex.value)) + ex.log_scale));
    };
    CHECK(logdev(80.0L) < logdev(40.0L));
}

TEST_CASE("lambda_n closed form") {
    CHECK(lambda_n(1) == 1);
    CHECK(lambda_n(2) == 1);
    CHECK(lambda_n(5) == 2);    // (m-1)! m! with m = 2
    CHECK(lambda_n(6) == 4);    // ((m-1)!)^2 with m = 3
    CHECK(lambda_n(7) == 12);
    for (int n = 1; n <= 40; ++n)
        CHECK(lambda_n(n) == lambda_n_min_form(n));
}

TEST_CASE("uniform algebraic 1F1 branch matches the plain one at n = 0") {
    cplx b(0.9L, 0), d(1.1L, 0), z(25, 0);
    Uniform1F1 u = uniform_1f1(b, d, 0, z, 5);
    KummerLargeZ k = kummer_large_z(b, d, -z, 6);
    CHECK(rel(u.value, k.algebraic) < 1e-14);
    CHECK(u.envelope > 0.0L);
}

TEST_CASE("uniform 2F2 expansion stays inside its envelope") {
    Uniform2F2 u = uniform_2f2(cplx(0.5L, 0), cplx(0.9L, 0), cplx(1.3L, 0),
                               cplx(1.1L, 0), 0, 4.4L, cplx(30, 0));
    real direct = pfq_dd({0.5L, 0.9L}, {1.3L, 1.1L}, -30.0L);
    CHECK((double)(std::abs(cplx(direct, 0) - u.value) / u.envelope) <
          10.0);
}

TEST_CASE("fixed-product expansion coefficient identities") {
    cplx beta(0.6L, 0);
    Psi2AsymBeta e = psi2_asym_beta(P, beta, 3);
    CHECK(rel(e.b1[0], cplx(1, 0)) < 1e-15);
    CHECK(rel(e.b2[0], hyp0f1(P.cp, beta)) < 1e-13);
    CHECK(std::abs(e.b3[0]) == 0.0L);
    cplx want_b31 = (cplx(1, 0) - P.a) * (P.c - P.a);
    CHECK(rel(e.b3[1], want_b31) < 1e-14);
}

TEST_CASE("fixed-product expansion tracks the series reference") {
    Psi2Params Q{cplx(0.8L, 0), cplx(1.3L, 0), cplx(1.1L, 0)};
    Psi2AsymBeta e = psi2_asym_beta(Q, cplx(1, 0), 2);
    cplx x = 200.0L * std::exp(cplx(0, PI - 0.05L));
    EvalResult ref =
        psi2_eval(Q, x, cplx(1, 0) / x, Psi2Method::f1f1_series);
    CHECK(rel(e.at(x).value, ref.value) < 1e-2);
}
