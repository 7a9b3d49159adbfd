#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "fourfold/errors.hpp"

namespace fourfold {

// Permutation of {0,1,2,3}; s[k] is the image of k.
struct Perm4 {
    std::array<uint8_t, 4> s{0, 1, 2, 3};

    bool operator==(const Perm4& o) const { return s == o.s; }
    uint8_t operator()(uint8_t k) const { return s[k]; }

    Perm4 then_after(const Perm4& inner) const {  // (*this) o inner
        Perm4 r;
        for (int k = 0; k < 4; ++k) r.s[k] = s[inner.s[k]];
        return r;
    }
    Perm4 inverse() const {
        Perm4 r;
        for (int k = 0; k < 4; ++k) r.s[s[k]] = static_cast<uint8_t>(k);
        return r;
    }
    int sign() const {
        int sg = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (s[i] > s[j]) sg = -sg;
        return sg;
    }
};

// The 24 permutations in lexicographic order of their image tuples.
inline const std::vector<Perm4>& all_perm4() {
    static const std::vector<Perm4> table = [] {
        std::vector<Perm4> t;
        std::array<uint8_t, 4> v{0, 1, 2, 3};
        do {
            t.push_back(Perm4{v});
        } while (std::next_permutation(v.begin(), v.end()));
        return t;
    }();
    return table;
}

inline int perm4_index(const Perm4& p) {
    const auto& all = all_perm4();
    for (size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return static_cast<int>(i);
    throw Error("permutation not found");
}

// Element of Gal(L/Q) = S4 x {e,rho}: sigma permutes the root symbols and
// eps toggles complex conjugation.
struct GaloisElem {
    Perm4 sigma;
    uint8_t eps = 0;

    bool operator==(const GaloisElem& o) const { return sigma == o.sigma && eps == o.eps; }
    // Group law (s,e)*(s',e') = (s o s', e xor e'); apply(g*h, u) =
    // apply(g, apply(h, u)).
    GaloisElem operator*(const GaloisElem& o) const {
        return {sigma.then_after(o.sigma), static_cast<uint8_t>(eps ^ o.eps)};
    }
    GaloisElem inverse() const { return {sigma.inverse(), eps}; }
    // The character (-1)^eps * sign(sigma); the action on i*D is by this sign.
    int chi() const { return (eps ? -1 : 1) * sigma.sign(); }
    int index() const { return perm4_index(sigma) * 2 + eps; }
};

inline const std::vector<GaloisElem>& all_galois() {
    static const std::vector<GaloisElem> table = [] {
        std::vector<GaloisElem> t;
        for (const Perm4& p : all_perm4())
            for (uint8_t e : {0, 1}) t.push_back(GaloisElem{p, e});
        return t;
    }();
    return table;
}

}  // namespace fourfold
