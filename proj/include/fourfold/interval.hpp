#pragma once

#include <algorithm>
#include <initializer_list>

#include "fourfold/rational.hpp"

namespace fourfold {

// Closed interval with exact rational endpoints. All operations return
// rigorous enclosures; nothing here ever rounds.
struct QInterval {
    Rat lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rat point) : lo(point), hi(point) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }

    // -1 / +1 when the sign is certified, 0 when the interval straddles zero.
    int sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline QInterval operator-(const QInterval& a, const QInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
inline QInterval operator-(const QInterval& a) { return {-a.hi, -a.lo}; }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline QInterval operator*(const Rat& s, const QInterval& a) {
    if (s >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

inline QInterval pow_iv(const QInterval& a, unsigned e) {
    QInterval acc(Rat(1)), b = a;
    while (e) {
        if (e & 1u) acc = acc * b;
        b = b * b;
        e >>= 1u;
    }
    return acc;
}

// Rectangular enclosure of a complex value.
struct ComplexBox {
    QInterval re, im;

    Rat width() const { return std::max(re.width(), im.width()); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

inline ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re + b.re, a.im + b.im};
}
inline ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace fourfold
