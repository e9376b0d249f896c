#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/gamma.hpp"
#include "humbert/psi1.hpp"
#include "humbert/series.hpp"
#include "humbert/special.hpp"

using namespace humbert;

namespace {
const Psi1Params P{cplx(0.7L, 0), cplx(1.3L, 0), cplx(1.9L, 0),
                   cplx(0.8L, 0)};

double rel(cplx got, cplx want) {
    return (double)(std::abs(got - want) /
                    std::max<real>(std::abs(want), 1e-300L));
}
} // namespace

TEST_CASE("collapses to one-variable series") {
    // Psi1[a,b;c,c';x,0] = 2F1[a,b;c;x]
    cplx x(0.4L, 0);
    cplx f21 = pfq({P.a, P.b}, {P.c}, x).value;
    CHECK(rel(f21, cplx(1.26674147597968062483905266477L, 0)) < 1e-12);
    CHECK(rel(psi1_eval(P, x, cplx(0, 0)).value, f21) < 1e-13);

    // Psi1[a,b;c,c';0,y] = 1F1[a;c';y]
    cplx y(1.2L, 0);
    CHECK(rel(psi1_eval(P, cplx(0, 0), y).value, hyp1f1(P.a, P.cp, y)) <
          1e-13);
}

TEST_CASE("inner-disk methods agree on the frozen value") {
    cplx x(0.4L, 0), y(1.2L, 0);
    const cplx want(6.18915558974211049096684327024L, 0);
    for (Psi1Method m : {Psi1Method::double_series, Psi1Method::f1f1_series,
                         Psi1Method::euler, Psi1Method::laplace}) {
        EvalResult r = psi1_eval(P, x, y, m);
        CHECK(r.log_scale == 0.0L);
        CHECK(rel(r.value, want) < 1e-11);
    }
}

TEST_CASE("negative-axis methods agree on the frozen values") {
    const cplx want(0.513968404906649547690477544076L, 0);
    cplx x(-5, 0), y(1, 0);
    for (Psi1Method m : {Psi1Method::continuation, Psi1Method::laplace,
                         Psi1Method::euler, Psi1Method::bessel_integral})
        CHECK(rel(psi1_eval(P, x, y, m).scaled(), want) < 1e-11);

    CHECK(rel(psi1_eval(P, cplx(-9, 0), cplx(1.5L, 0),
                        Psi1Method::bessel_integral)
                  .scaled(),
              cplx(0.396713392425807651180454861614L, 0)) < 1e-11);
}

TEST_CASE("auto dispatch picks the documented method per region") {
    CHECK(psi1_eval(P, cplx(0.5L, 0), cplx(3, 0)).method ==
          "psi1.double_series");
    CHECK(psi1_eval(P, cplx(-5, 0), cplx(1, 0)).method ==
          "psi1.continuation");
    CHECK(psi1_eval(P, cplx(0.95L, 0), cplx(400, 0)).method ==
          "psi1.laplace");
}

TEST_CASE("continuation requires a - b off the integer lattice") {
    Psi1Params bad{cplx(1, 0), cplx(2, 0), cplx(1.9L, 0), cplx(0.8L, 0)};
    CHECK_THROWS_AS(
        psi1_eval(bad, cplx(-5, 0), cplx(1, 0), Psi1Method::continuation),
        DomainError);
    CHECK_THROWS_AS(
        psi1_eval(P, cplx(5, 0), cplx(1, 0), Psi1Method::continuation),
        BranchCutError);
}

TEST_CASE("two-branch prefactor values for the Glauber parameters") {
    // f_{3/2}(1, 1/2) = pi/2 and f_{3/2}(1/2, 1) = -1
    CHECK(rel(coeff_f(cplx(1.5L, 0), cplx(1, 0), cplx(0.5L, 0)),
              cplx(PI / 2, 0)) < 1e-15);
    CHECK(rel(coeff_f(cplx(1.5L, 0), cplx(0.5L, 0), cplx(1, 0)),
              cplx(-1, 0)) < 1e-15);
}

TEST_CASE("small-y expansion structure and accuracy") {
    Psi1SmallY e = psi1_asym_small_y(P, cplx(-2, 0), 3);
    CHECK(rel(e.a1[0], cplx(1, 0)) < 1e-15);
    CHECK(rel(e.a2[0], cplx(1, 0)) < 1e-15);
    CHECK(rel(e.pref1, coeff_f(P.c, P.b, P.a)) < 1e-15);
    CHECK(rel(e.pref2, coeff_f(P.c, P.a, P.b)) < 1e-15);

    cplx y(0.01L, 0);
    EvalResult ref =
        psi1_eval(P, cplx(-2, 0) / y, y, Psi1Method::continuation);
    CHECK(rel(e.at(y).value, ref.value) < 1e-4);
}

TEST_CASE("small-x expansion tracks the scaled reference") {
    // Positive direction: Psi1[x, y/x] ~ dominant exponential branch
    real y = 4.0L, x = 1e-3L;
    Psi1SmallX e = psi1_asym_small_x(P, cplx(y, 0));
    ExpansionResult ex = e.at(cplx(x, 0));
    EvalResult ref = psi1_eval(P, cplx(x, 0), cplx(y / x, 0));
    CHECK(ex.log_scale == doctest::Approx((double)(y / x)));
    real com = std::max(ex.log_scale, ref.log_scale);
    CHECK(rel(ex.value * std::exp(cplx(ex.log_scale - com, 0)),
              ref.value * std::exp(cplx(ref.log_scale - com, 0))) < 5e-2);

    // Negative direction with the algebraic completion
    Psi1SmallX ec = psi1_asym_small_x(P, cplx(y, 0), true, true);
    ExpansionResult exc = ec.at(cplx(x, 0));
    EvalResult refn = psi1_eval(P, cplx(-x, 0), cplx(y / x, 0));
    real common = std::max(exc.log_scale, refn.log_scale);
    cplx a = exc.value * std::exp(cplx(exc.log_scale - common, 0));
    cplx b = refn.value * std::exp(cplx(refn.log_scale - common, 0));
    CHECK(rel(a, b) < 5e-2);
}

TEST_CASE("small-x expansion rejects unusable parameters") {
    Psi1Params bad{cplx(-0.5L, 0), P.b, P.c, P.cp};
    CHECK_THROWS_AS(psi1_asym_small_x(bad, cplx(1, 0)), DomainError);
}
