#ifndef HUMBERT_GAMMA_HPP
#define HUMBERT_GAMMA_HPP

#include <vector>

#include "humbert/types.hpp"

namespace humbert {

// log Gamma(z), principal value up to a multiple of 2*pi*i (callers
// always exponentiate sums of these, so the branch offset cancels).
// Throws PoleError at nonpositive integers.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Rising factorial (a)_n.  Exact finite product; (a)_0 = 1 even at a = 0.
cplx pochhammer(cplx a, long n);

// prod Gamma(num_i) / prod Gamma(den_j), evaluated via log-Gamma
// differences.  Pole bookkeeping: a Gamma pole in the denominator that
// no numerator pole cancels gives an exact 0; paired poles produce the
// finite limit; an uncancelled numerator pole throws PoleError.
cplx gamma_ratio(const std::vector<cplx>& numerators,
                 const std::vector<cplx>& denominators);

// f_gamma(a, b) = Gamma(gamma) Gamma(a-b) / (Gamma(a) Gamma(gamma-b)).
cplx coeff_f(cplx gamma, cplx a, cplx b);

// Principal power w^alpha = exp(alpha * Log w), Arg in (-pi, pi].
cplx cpow(cplx w, cplx alpha);

} // namespace humbert

#endif
