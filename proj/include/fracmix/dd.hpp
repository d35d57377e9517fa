#pragma once

#include <cmath>

// Double-double arithmetic: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving ~32 significant decimal digits.  Used by the Mittag-Leffler Taylor
// branch, where individual series terms can reach ~e^35 while the sum is O(1);
// plain double term evaluation would leave ~1e-2 absolute error there.
//
// The primitives are the classical error-free transformations (Dekker, Knuth)
// in the arrangement popularized by the QD library of Hida/Li/Bailey.

namespace fracmix::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h, double l) : hi(h), lo(l) {}
    constexpr dd(double h) : hi(h), lo(0.0) {}

    double to_double() const { return hi + lo; }
};

// s + err = a + b exactly, no assumption on magnitudes.
inline dd two_sum(double a, double b) {
    double s = a + b;
    double v = s - a;
    double err = (a - (s - v)) + (b - v);
    return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

// p + err = a * b exactly.
inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    dd t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator+(dd a, double b) {
    dd s = two_sum(a.hi, b);
    s.lo += a.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }
inline dd operator-(dd a, double b) { return a + (-b); }
inline dd operator-(double a, dd b) { return (-b) + a; }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + q3;
}

inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline bool operator<(dd a, double b) { return a.hi < b || (a.hi == b && a.lo < 0.0); }
inline bool operator>(dd a, double b) { return a.hi > b || (a.hi == b && a.lo > 0.0); }

inline dd dd_abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

// ln 2 and ln sqrt(2*pi) to double-double accuracy.
inline constexpr dd dd_ln2{0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};
inline constexpr dd dd_ln_sqrt_2pi{0x1.d67f1c864beb5p-1, -0x1.65b5a1b7ff5dfp-55};

// exp, log, lgamma on double-double values (implemented in special.cpp).
dd dd_exp(dd x);
dd dd_log(dd x);   // x > 0
dd dd_lgamma(dd x); // x > 0

} // namespace fracmix::detail
