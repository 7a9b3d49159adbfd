#pragma once

#include <utility>
#include <vector>

#include "fourfold/interval.hpp"
#include "fourfold/linalg.hpp"
#include "fourfold/rational.hpp"

namespace fourfold {

// Dense univariate polynomial over Q, coefficients low degree first.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    QPoly(std::initializer_list<Rat> coeffs) : c(coeffs) { normalize(); }
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    QInterval eval(const QInterval& x) const {
        QInterval acc{Rat(0)};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + QInterval(*it);
        return acc;
    }
};

inline QPoly operator-(const QPoly& p) {
    QPoly q = p;
    for (auto& v : q.c) v = -v;
    return q;
}

inline QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

inline QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

inline QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

inline std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    QPoly q;
    if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (!a.is_zero() && a.deg() >= b.deg()) {
        const int shift = a.deg() - b.deg();
        const Rat f = a.lead() / b.lead();
        q.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= f * b.c[i];
        a.normalize();
    }
    q.normalize();
    return {q, a};
}

inline QPoly derivative(const QPoly& p) {
    QPoly d;
    if (p.deg() < 1) return d;
    d.c.resize(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) d.c[i - 1] = p.c[i] * Rat(static_cast<long>(i));
    d.normalize();
    return d;
}

// Canonical Sturm chain: p, p', then negated remainders.
inline std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    chain.push_back(p);
    QPoly d = derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        QPoly rem = divrem(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sign_variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const QPoly& p : chain) {
        const int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Sign variations at +inf (dir=+1) or -inf (dir=-1).
inline int sign_variations_at_infinity(const std::vector<QPoly>& chain, int dir) {
    int var = 0, prev = 0;
    for (const QPoly& p : chain) {
        if (p.is_zero()) continue;
        int s = sign_of(p.lead());
        if (dir < 0 && p.deg() % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (a, b]; with the whole line when no
// bounds are given.
inline int count_real_roots(const std::vector<QPoly>& chain, const Rat& a, const Rat& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}
inline int count_real_roots(const QPoly& p) {
    if (p.deg() <= 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations_at_infinity(chain, -1) - sign_variations_at_infinity(chain, +1);
}

// Resultant via the Sylvester matrix; fine at the degrees used here.
inline Rat resultant(const QPoly& p, const QPoly& q) {
    const int m = p.deg(), n = q.deg();
    if (m < 0 || n < 0) return Rat(0);
    const int size = m + n;
    QMatrix s(size, std::vector<Rat>(size, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + m - i] = p.c[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + n - i] = q.c[i];
    return qdeterminant(std::move(s));
}

// All rational roots of p (exact). Denominator/numerator divisor search on
// the integer-cleared coefficients.
inline std::vector<Rat> rational_roots(const QPoly& p) {
    std::vector<Rat> roots;
    if (p.deg() < 1) return roots;
    Int lcm = 1;
    for (const Rat& v : p.c) {
        Int den(v.get_den()), g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
    }
    std::vector<Int> ic(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i)
        ic[i] = Int(p.c[i].get_num()) * (lcm / Int(p.c[i].get_den()));
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low >= ic.size()) return roots;
    auto divisors = [](Int v) {
        std::vector<Int> out;
        v = abs(v);
        for (Int d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    for (const Int& num : divisors(ic[low]))
        for (const Int& den : divisors(ic.back()))
            for (int sgn : {1, -1}) {
                Rat cand = rat(sgn * num, den);
                if (p.eval(cand) == 0) {
                    bool seen = false;
                    for (const Rat& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

inline bool has_rational_root(const QPoly& p) { return !rational_roots(p).empty(); }

}  // namespace fourfold
