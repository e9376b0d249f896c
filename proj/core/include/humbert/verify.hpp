#ifndef HUMBERT_VERIFY_HPP
#define HUMBERT_VERIFY_HPP

#include <string>
#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// One measured quantity against its accepted interval.  Serializes to
// the CSV row `suite,check,param_json,grid_point,measured,expected_lo,
// expected_hi,pass`.
struct CheckRow {
    std::string suite;
    std::string check;
    std::string param_json;
    std::string grid_point;
    real measured = 0;
    real expected_lo = 0;
    real expected_hi = 0;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRow> rows;
    double runtime_seconds = 0;

    bool pass() const;
};

// Lossless CSV round trip; reals printed with 21 significant digits.
std::string to_csv(const std::vector<CheckRow>& rows, bool header = true);
std::vector<CheckRow> parse_csv(const std::string& text);

// Least-squares slope of y against x.
real fit_slope(const std::vector<real>& x, const std::vector<real>& y);

// Relative discrepancy of two scaled results on a common exponential
// scale.
real rel_diff(const EvalResult& u, const EvalResult& v);

struct HarnessOptions {
    real slope_tol = 0.3L;
    real envelope_mult = 10.0L;
    unsigned seed = 1;
    std::vector<real> henkel_xi{0.5L, 1.0L, 2.0L};
    std::vector<real> henkel_z{1e-2L, 1e-3L, 1e-4L};
    EvalConfig cfg{};
};

const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name,
                             const HarnessOptions& opt = {});

} // namespace humbert

#endif
