#pragma once

#include <gmpxx.h>

#include <string>

#include "fourfold/errors.hpp"

namespace fourfold {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", and an optional leading sign.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw UsageError("bad rational literal: " + s);
    if (r.get_den() == 0) throw UsageError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat acc(1), b = base;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline Int pow_int(const Int& base, unsigned e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline bool is_perfect_square(const Int& z) {
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

inline bool is_rational_square(const Rat& r) {
    return r >= 0 && is_perfect_square(Int(r.get_num())) && is_perfect_square(Int(r.get_den()));
}

// 2^e as a rational, e may be negative.
inline Rat pow2(int e) {
    Rat r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned>(-e));
    return r;
}

}  // namespace fourfold
