#ifndef HUMBERT_SERIES_HPP
#define HUMBERT_SERIES_HPP

#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// Compensated (Kahan) accumulator for complex series.
class CompensatedSum {
public:
    void add(cplx t) {
        cplx y = t - comp_;
        cplx s = sum_ + y;
        comp_ = (s - sum_) - y;
        sum_ = s;
    }
    cplx value() const { return sum_; }

private:
    cplx sum_{0, 0};
    cplx comp_{0, 0};
};

// Generalized hypergeometric series pFq(upper; lower; z) with
// ratio-based adaptive truncation.  Terminating series (an upper
// parameter in Z_{<=0}) are summed exactly.  Throws ParameterPole when
// a lower parameter pole is not truncated away first, NoConvergence
// when max_terms is exhausted.
SeriesResult pfq(const std::vector<cplx>& upper,
                 const std::vector<cplx>& lower, cplx z,
                 const EvalConfig& cfg = {});

// Real-argument pFq summed in double-length arithmetic (~36 digits).
// Independent oracle for cancellation-heavy alternating series; does
// not share the truncation logic of pfq above.
real pfq_dd(const std::vector<real>& upper, const std::vector<real>& lower,
            real z, int max_terms = 4000);

} // namespace humbert

#endif
