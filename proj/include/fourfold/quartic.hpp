#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "fourfold/polynomial.hpp"

namespace fourfold {

// P = a x^4 + b x^2 + c x + d. The missing cubic term keeps the root sum
// zero, which the splitting-field normal form relies on.
struct Quartic {
    Rat a, b, c, d;

    bool operator==(const Quartic& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // x^4 + p x^2 + q x + r with the same roots.
    QPoly monic() const {
        if (a == 0) throw DegenerateQuartic("leading coefficient is zero");
        return QPoly{std::vector<Rat>{d / a, c / a, b / a, Rat(0), Rat(1)}};
    }
    Rat p() const { return b / a; }
    Rat q() const { return c / a; }
    Rat r() const { return d / a; }
};

// Discriminant of the monic quartic; equals the squared Vandermonde of the
// roots.
inline Rat quartic_delta(const Quartic& P) {
    const Rat p = P.p(), q = P.q(), r = P.r();
    return 16 * pow_rat(p, 4) * r - 4 * pow_rat(p, 3) * q * q - 128 * p * p * r * r +
           144 * p * q * q * r - 27 * pow_rat(q, 4) + 256 * pow_rat(r, 3);
}

// z^3 + 2p z^2 + (p^2 - 4r) z - q^2; a rational root z = s^2 corresponds to
// a quadratic factorization (x^2+sx+b)(x^2-sx+c).
inline QPoly resolvent_cubic(const Quartic& P) {
    const Rat p = P.p(), q = P.q(), r = P.r();
    return QPoly{std::vector<Rat>{-q * q, p * p - 4 * r, 2 * p, Rat(1)}};
}

namespace detail {

inline bool splits_into_quadratics(const Quartic& P) {
    const Rat p = P.p(), q = P.q(), r = P.r();
    if (q == 0) {
        // (x^2+b)(x^2+c) or (x^2+ax+b)(x^2-ax+b)
        if (is_rational_square(p * p - 4 * r)) return true;
        if (is_rational_square(r)) {
            Rat s(Int(sqrt(Int(r.get_num()))), Int(sqrt(Int(r.get_den()))));
            s.canonicalize();
            for (const Rat& root : {Rat(s), Rat(-s)}) {
                const Rat t = 2 * root - p;
                if (t >= 0 && is_rational_square(t)) return true;
            }
        }
        return false;
    }
    for (const Rat& z : rational_roots(resolvent_cubic(P)))
        if (z > 0 && is_rational_square(z)) return true;
    return false;
}

inline std::map<Int, unsigned> factorize(Int v) {
    std::map<Int, unsigned> out;
    for (Int p = 2; p * p <= v; p == 2 ? p = 3 : p += 2)
        while (v % p == 0) {
            ++out[p];
            v /= p;
        }
    if (v > 1) ++out[v];
    return out;
}

}  // namespace detail

struct GateReport {
    bool irreducible = false;
    bool four_real_roots = false;
    bool galois_s4 = false;
    bool delta_integral = false;
    int real_root_count = 0;
    Rat discriminant;  // of the input polynomial, a^6 * delta
    Rat delta;         // squared Vandermonde of the roots
    Int rescale_n = 1;  // minimal N making delta integral under x -> N x

    bool admissible() const {
        return irreducible && four_real_roots && galois_s4 && delta_integral;
    }
};

inline GateReport gate_quartic(const Quartic& P) {
    if (P.a == 0) throw DegenerateQuartic("leading coefficient is zero");
    GateReport g;
    g.delta = quartic_delta(P);
    g.discriminant = pow_rat(P.a, 6) * g.delta;
    if (g.delta == 0) throw DegenerateQuartic("repeated root (zero discriminant)");

    const QPoly monic = P.monic();
    g.real_root_count = count_real_roots(monic);
    g.four_real_roots = g.real_root_count == 4;
    g.irreducible = !has_rational_root(monic) && !detail::splits_into_quadratics(P);
    g.galois_s4 = g.irreducible && !has_rational_root(resolvent_cubic(P)) &&
                  !is_rational_square(g.delta);
    g.delta_integral = is_integer(g.delta);
    if (!g.delta_integral) {
        Int n = 1;
        for (const auto& [prime, exp] : detail::factorize(Int(g.delta.get_den())))
            n *= pow_int(prime, (exp + 11) / 12);
        g.rescale_n = n;
    }
    return g;
}

// Quartic whose roots are N times the roots of P.
inline Quartic rescale_quartic(const Quartic& P, const Int& n) {
    const Rat nr = rat(n);
    return {P.a, P.b * nr * nr, P.c * pow_rat(nr, 3), P.d * pow_rat(nr, 4)};
}

// Lexicographically first integer quartic (a,b,c,d), a >= 1, passing every
// gate check; rescaled when delta needs it. Deterministic.
inline Quartic search_quartic(unsigned coeff_bound) {
    const long bound = static_cast<long>(coeff_bound);
    for (long a = 1; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d) {
                    Quartic cand{rat(a), rat(b), rat(c), rat(d)};
                    GateReport g;
                    try {
                        g = gate_quartic(cand);
                    } catch (const DegenerateQuartic&) {
                        continue;
                    }
                    if (!(g.irreducible && g.four_real_roots && g.galois_s4)) continue;
                    if (!g.delta_integral) {
                        cand = rescale_quartic(cand, g.rescale_n);
                        if (!gate_quartic(cand).admissible()) continue;
                    }
                    return cand;
                }
    throw NotFound("no admissible quartic within coefficient bound " +
                   std::to_string(coeff_bound));
}

// Four disjoint isolating intervals, ordered x1 > x2 > x3 > x4, refinable to
// any requested width. Certified by the Sturm chain of the monic quartic.
struct RootEnclosure {
    std::array<QInterval, 4> iv;  // iv[0] encloses the largest root
    int bits = 0;
    QPoly monic;
    std::vector<QPoly> chain;

    void refine_to(int target_bits) {
        if (target_bits <= bits) return;
        const Rat w = pow2(-target_bits);
        for (QInterval& I : iv) {
            while (I.width() > w) {
                const Rat mid = I.mid();
                // no rational roots: the gate guarantees irreducibility
                if (count_real_roots(chain, I.lo, mid) == 1)
                    I.hi = mid;
                else
                    I.lo = mid;
            }
        }
        bits = target_bits;
    }
};

inline RootEnclosure isolate_roots(const Quartic& P, int bits) {
    RootEnclosure enc;
    enc.monic = P.monic();
    enc.chain = sturm_chain(enc.monic);
    Rat bound(1);
    for (int i = 0; i < 4; ++i) {
        Rat m = abs(enc.monic.c[i]);
        if (m > bound) bound = m;
    }
    bound += 1;
    std::vector<std::pair<QInterval, int>> stack{
        {QInterval{-bound, bound}, count_real_roots(enc.chain, -bound, bound)}};
    std::vector<QInterval> found;
    while (!stack.empty()) {
        auto [I, count] = stack.back();
        stack.pop_back();
        if (count == 0) continue;
        if (count == 1) {
            found.push_back(I);
            continue;
        }
        const Rat mid = I.mid();
        if (enc.monic.eval(mid) == 0)
            throw Error("rational root during isolation; gate should have rejected");
        const int left = count_real_roots(enc.chain, I.lo, mid);
        stack.push_back({QInterval{I.lo, mid}, left});
        stack.push_back({QInterval{mid, I.hi}, count - left});
    }
    if (found.size() != 4)
        throw Error("expected four real roots, found " + std::to_string(found.size()));
    std::sort(found.begin(), found.end(),
              [](const QInterval& x, const QInterval& y) { return x.lo > y.lo; });
    for (int i = 0; i < 4; ++i) enc.iv[i] = found[i];
    enc.bits = 0;
    enc.refine_to(bits);
    return enc;
}

}  // namespace fourfold
