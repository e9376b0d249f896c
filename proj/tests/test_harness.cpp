#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "humbert/errors.hpp"
#include "humbert/verify.hpp"

using namespace humbert;

TEST_CASE("fit_slope recovers exact and synthetic slopes") {
    CHECK((double)fit_slope({0, 1, 2, 3}, {1, 3, 5, 7}) ==
          doctest::Approx(2.0).epsilon(1e-15));

    // Quadratic toy decay err = 3 v^2 on a halving ladder
    std::vector<real> lx, le;
    for (real v : {1.0L, 0.5L, 0.25L, 0.125L}) {
        lx.push_back(std::log(v));
        le.push_back(std::log(3.0L * v * v));
    }
    CHECK((double)fit_slope(lx, le) == doctest::Approx(2.0).epsilon(1e-2));

    CHECK_THROWS_AS(fit_slope({1.0L}, {1.0L}), DomainError);
}

TEST_CASE("CSV serialization round-trips losslessly") {
    std::vector<CheckRow> rows;
    CheckRow r;
    r.suite = "demo";
    r.check = "quote,comma\"check";
    r.param_json = R"({"a":0.7,"b":1.3})";
    r.grid_point = "x=0.5;y=-2";
    r.measured = 0.1234567890123456789L;
    r.expected_lo = -1e-300L;
    r.expected_hi = 3.0L;
    r.pass = true;
    rows.push_back(r);

    std::string csv = to_csv(rows);
    CHECK(csv.rfind("suite,check,param_json,grid_point,measured,"
                    "expected_lo,expected_hi,pass\n",
                    0) == 0);

    std::vector<CheckRow> back = parse_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0].suite == r.suite);
    CHECK(back[0].check == r.check);
    CHECK(back[0].param_json == r.param_json);
    CHECK(back[0].grid_point == r.grid_point);
    CHECK(back[0].measured == r.measured);
    CHECK(back[0].expected_lo == r.expected_lo);
    CHECK(back[0].expected_hi == r.expected_hi);
    CHECK(back[0].pass == r.pass);
}

TEST_CASE("rel_diff compares on a common exponential scale") {
    EvalResult u, v;
    u.value = cplx(std::exp(1.0L), 0);
    u.log_scale = 0;
    v.value = cplx(1, 0);
    v.log_scale = 1;
    CHECK((double)rel_diff(u, v) < 1e-18);
}

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 12);
    CHECK_THROWS_AS(run_suite("nosuch"), DomainError);
}

TEST_CASE("seeded suites are byte-deterministic") {
    HarnessOptions opt;
    opt.seed = 7;
    VerificationReport a = run_suite("cross-psi1", opt);
    VerificationReport b = run_suite("cross-psi1", opt);
    CHECK(to_csv(a.rows) == to_csv(b.rows));
    CHECK(a.pass());
}

TEST_CASE("report pass aggregates rows") {
    VerificationReport rep;
    CHECK(!rep.pass());   // empty report proves nothing
    CheckRow ok;
    ok.pass = true;
    rep.rows.push_back(ok);
    CHECK(rep.pass());
    CheckRow bad;
    bad.pass = false;
    rep.rows.push_back(bad);
    CHECK(!rep.pass());
}
