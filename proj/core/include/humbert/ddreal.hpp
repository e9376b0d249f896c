#ifndef HUMBERT_DDREAL_HPP
#define HUMBERT_DDREAL_HPP

#include <cmath>

#include "humbert/types.hpp"

namespace humbert::detail {

// Unevaluated double-length arithmetic over long double (~36 decimal
// digits).  Only what the high-precision series oracles need.
struct dd {
    real hi = 0, lo = 0;

    dd() = default;
    dd(real h) : hi(h), lo(0) {}
    dd(real h, real l) : hi(h), lo(l) {}

    explicit operator real() const { return hi + lo; }
};

inline dd two_sum(real a, real b) {
    real s = a + b;
    real bb = s - a;
    real err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(real a, real b) {
    real s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(real a, real b) {
    real p = a * b;
    real err = std::fmal(a, b, -p);
    return {p, err};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    real q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    real q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    real q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }

inline bool fabs_less(dd a, real b) { return std::fabs(a.hi) < b; }

} // namespace humbert::detail

#endif
