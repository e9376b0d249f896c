#include "humbert/gamma.hpp"

#include <cmath>

#include "humbert/errors.hpp"

namespace humbert {

namespace {

// Stirling coefficients B_{2n} / (2n (2n-1)).
constexpr real stirling_c[] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    854513.0L / 63756.0L,
    -236364091.0L / 1506960.0L,
};

constexpr real LOG_SQRT_2PI = 0.91893853320467274178032973640561764L;

// Stirling series, valid for |z| reasonably large with Re(z) > 0.
cplx log_gamma_stirling(cplx z) {
    cplx inv = cplx(1, 0) / z;
    cplx inv2 = inv * inv;
    cplx sum(0, 0);
    cplx p = inv;
    for (real c : stirling_c) {
        sum += c * p;
        p *= inv2;
    }
    return (z - cplx(0.5L, 0)) * std::log(z) - z + LOG_SQRT_2PI + sum;
}

} // namespace

cplx log_gamma(cplx z) {
    long k;
    if (is_nonpos_int(z, &k))
        throw PoleError("log_gamma: pole at nonpositive integer");

    if (z.real() < 0.5L) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        cplx s = std::sin(PI * z);
        return std::log(PI) - std::log(s) - log_gamma(cplx(1, 0) - z);
    }
    // Shift until the Stirling series is accurate at extended precision.
    cplx shift(0, 0);
    while (std::abs(z) < 20.0L) {
        shift += std::log(z);
        z += cplx(1, 0);
    }
    return log_gamma_stirling(z) - shift;
}

cplx gamma_fn(cplx z) {
    return std::exp(log_gamma(z));
}

cplx pochhammer(cplx a, long n) {
    cplx p(1, 0);
    for (long k = 0; k < n; ++k) p *= a + cplx(static_cast<real>(k), 0);
    return p;
}

cplx gamma_ratio(const std::vector<cplx>& numerators,
                 const std::vector<cplx>& denominators) {
    // Separate pole arguments from regular ones; a pole at -k carries a
    // factor (-1)^k / (k! eps) as eps -> 0.
    std::vector<long> num_poles, den_poles;
    cplx log_acc(0, 0);
    for (const cplx& z : numerators) {
        long k;
        if (is_nonpos_int(z, &k))
            num_poles.push_back(k);
        else
            log_acc += log_gamma(z);
    }
    for (const cplx& z : denominators) {
        long k;
        if (is_nonpos_int(z, &k))
            den_poles.push_back(k);
        else
            log_acc -= log_gamma(z);
    }
    if (num_poles.size() > den_poles.size())
        throw PoleError("gamma_ratio: uncancelled numerator Gamma pole");
    if (num_poles.size() < den_poles.size())
        return cplx(0, 0);

    // Paired poles: Gamma(-kn + eps) / Gamma(-kd + eps)
    //   -> (-1)^(kn - kd) kd! / kn!.
    real sign = 1;
    for (size_t i = 0; i < num_poles.size(); ++i) {
        long kn = num_poles[i], kd = den_poles[i];
        if ((kn - kd) % 2 != 0) sign = -sign;
        log_acc += std::lgammal(static_cast<real>(kd) + 1) -
                   std::lgammal(static_cast<real>(kn) + 1);
    }
    return sign * std::exp(log_acc);
}

cplx coeff_f(cplx gamma, cplx a, cplx b) {
    return gamma_ratio({gamma, a - b}, {a, gamma - b});
}

cplx cpow(cplx w, cplx alpha) {
    if (alpha == cplx(0, 0)) return cplx(1, 0);
    if (w == cplx(0, 0)) return cplx(0, 0);
    return std::exp(alpha * std::log(w));
}

} // namespace humbert
