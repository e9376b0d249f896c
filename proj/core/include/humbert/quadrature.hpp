#ifndef HUMBERT_QUADRATURE_HPP
#define HUMBERT_QUADRATURE_HPP

#include <functional>

#include "humbert/types.hpp"

namespace humbert {

enum class DecayClass { exponential, gaussian, gamma_ratio };

// The evaluator samples the integrand at real points of the path (the
// unit interval, the positive half-line, or the imaginary offset t of
// a vertical line Re s = sigma).  On the unit interval the evaluator
// supplies only the smooth factor: the rule itself applies
// t^(alpha-1) (1-t)^(beta-1) from exactly-computed endpoint distances,
// because the bare node rounds onto a singular endpoint long before
// its contribution is negligible.
struct IntegrandSpec {
    std::function<cplx(real)> evaluator;
    cplx alpha{1, 0};
    cplx beta{1, 0};
    DecayClass decay = DecayClass::exponential;
};

// Integral over (0, 1); endpoint singularities handled by a tanh-sinh
// (doubly-exponential) node transformation.
QuadResult integrate_unit_interval(const IntegrandSpec& f,
                                   const EvalConfig& cfg = {});

// Integral over (0, infinity) for integrands with at least exponential
// decay, via an exp-sinh transformation.
QuadResult integrate_halfline(const IntegrandSpec& f,
                              const EvalConfig& cfg = {});

// (1 / 2 pi i) Integral over the vertical line Re s = sigma; the
// evaluator receives t with s = sigma + i t.  Symmetric truncation at
// |t| = T, with T grown adaptively from the sampled decay.
QuadResult integrate_vertical_line(const IntegrandSpec& h, real sigma,
                                   const EvalConfig& cfg = {});

} // namespace humbert

#endif
