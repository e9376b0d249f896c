#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/f2.hpp"
#include "humbert/psi1.hpp"
#include "humbert/series.hpp"
#include "humbert/verify.hpp"

using namespace humbert;

namespace {
const F2Params P{cplx(0.9L, 0), cplx(0.6L, 0), cplx(0.4L, 0), cplx(1.4L, 0),
                 cplx(1.2L, 0)};

double rel(cplx got, cplx want) {
    return (double)(std::abs(got - want) /
                    std::max<real>(std::abs(want), 1e-300L));
}
} // namespace

TEST_CASE("collapses to 2F1") {
    cplx x(0.3L, 0), y(0.25L, 0);
    cplx f_x = pfq({P.a, P.b}, {P.c}, x).value;
    cplx f_y = pfq({P.a, P.bp}, {P.cp}, y).value;
    CHECK(rel(f2_eval(P, x, cplx(0, 0)).value, f_x) < 1e-13);
    CHECK(rel(f2_eval(P, cplx(0, 0), y).value, f_y) < 1e-13);

    // b' = 0 removes the y series entirely
    F2Params Z{P.a, P.b, cplx(0, 0), P.c, P.cp};
    CHECK(rel(f2_eval(Z, x, y).value, f_x) < 1e-13);
}

TEST_CASE("methods agree on frozen values") {
    const cplx want_in(1.22586112235827777282286407063L, 0);
    CHECK(rel(f2_eval(P, cplx(0.2L, 0), cplx(0.3L, 0),
                      F2Method::double_series)
                  .value,
              want_in) < 1e-11);
    CHECK(rel(f2_eval(P, cplx(0.2L, 0), cplx(0.3L, 0), F2Method::laplace)
                  .value,
              want_in) < 1e-11);

    const cplx want_out(0.266394458395539098930994645172L, 0);
    CHECK(rel(f2_eval(P, cplx(-20, 0), cplx(0.3L, 0), F2Method::jaeger)
                  .value,
              want_out) < 1e-11);
    CHECK(rel(f2_eval(P, cplx(-20, 0), cplx(0.3L, 0), F2Method::laplace)
                  .value,
              want_out) < 1e-11);
}

TEST_CASE("symmetric under (b,c,x) <-> (b',c',y)") {
    F2Params S{P.a, P.bp, P.b, P.cp, P.c};
    EvalResult u = f2_reference(P, cplx(0.2L, 0), cplx(0.3L, 0));
    EvalResult v = f2_reference(S, cplx(0.3L, 0), cplx(0.2L, 0));
    CHECK((double)rel_diff(u, v) < 1e-12);
}

TEST_CASE("validity guards") {
    CHECK_THROWS_AS(f2_eval(P, cplx(0.8L, 0), cplx(0.8L, 0),
                            F2Method::double_series),
                    DomainError);
    CHECK_THROWS_AS(
        f2_eval(P, cplx(-1.1L, 0), cplx(0.5L, 0), F2Method::jaeger),
        DomainError);
}

TEST_CASE("small-y expansion structure and accuracy") {
    F2SmallY e = f2_asym_small_y(P, cplx(-2, 0), 3);
    CHECK(rel(e.c1[0], cplx(1, 0)) < 1e-15);
    CHECK(rel(e.c2[0], cplx(1, 0)) < 1e-15);

    cplx y(0.01L, 0);
    EvalResult ref = f2_eval(P, cplx(-2, 0) / y, y, F2Method::jaeger);
    CHECK(rel(e.at(y).value, ref.value) < 1e-4);
}

TEST_CASE("coefficients degenerate to the confluent ones") {
    // c1(m; eps*x) with b' = 1/eps, scaled by eps^m, approaches a1(m; x)
    const real eps = 1e-6L;
    Psi1Params pp{P.a, P.b, P.c, P.cp};
    F2Params pf{P.a, P.b, cplx(1.0L / eps, 0), P.c, P.cp};
    cplx x(-2, 0);
    Psi1SmallY a = psi1_asym_small_y(pp, x, 4);
    F2SmallY c = f2_asym_small_y(pf, eps * x, 4);
    real scale = 1.0L;
    for (int m = 0; m < 4; ++m) {
        CHECK(rel(c.c1[(size_t)m] * scale, a.a1[(size_t)m]) < 1e-4);
        CHECK(rel(c.c2[(size_t)m] * scale, a.a2[(size_t)m]) < 1e-4);
        scale *= eps;
    }
}

TEST_CASE("confluence limits converge at first order") {
    ConfluencePair c1 = confluence_limit(ConfluenceTarget::psi1_from_f2, P,
                                         cplx(0.3L, 0), cplx(0.4L, 0),
                                         1e-2L);
    ConfluencePair c2 = confluence_limit(ConfluenceTarget::psi1_from_f2, P,
                                         cplx(0.3L, 0), cplx(0.4L, 0),
                                         5e-3L);
    double ratio = (double)(c1.abs_difference / c2.abs_difference);
    CHECK(ratio > 1.5);
    CHECK(ratio < 3.0);

    CHECK_THROWS_AS(confluence_limit(ConfluenceTarget::psi1_from_f2, P,
                                     cplx(0.3L, 0), cplx(0.4L, 0), 0.5L),
                    DomainError);
}
