#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fourfold/splitfield.hpp"

namespace fourfold {

// Exterior monomial over the eight generators, encoded as a bitmask.
// Bits 0..3 are dz_1..dz_4, bits 4..7 are the conjugates, and that bit
// order is the canonical generator order.
using Mono = uint8_t;

inline int mono_degree(Mono m) { return __builtin_popcount(m); }
inline int mono_p(Mono m) { return __builtin_popcount(m & 0x0F); }
inline int mono_q(Mono m) { return __builtin_popcount(m >> 4); }

// Sign of concatenating two sorted monomials: parity of the pairs (a,b),
// a in A, b in B, with a > b.
inline int wedge_sign(Mono a, Mono b) {
    int inversions = 0;
    for (int bit = 0; bit < 8; ++bit)
        if (b & (1u << bit)) inversions += __builtin_popcount(a >> (bit + 1));
    return inversions & 1 ? -1 : 1;
}

// Coefficient ring of the plain translation-invariant forms.
struct SplitRing {
    const FieldContext* F;

    using Elem = SplitElem;
    Elem zero() const { return {}; }
    Elem one() const { return FieldContext::one(); }
    Elem from_rat(const Rat& v) const { return FieldContext::from_rat(v); }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
    Elem conj(const Elem& a) const { return F->conj(a); }
};

template <class R>
struct FormT {
    using Elem = typename R::Elem;
    std::map<Mono, Elem> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const FormT& o) const { return t == o.t; }
};

using Form = FormT<SplitRing>;

template <class R>
void form_set(const R& ring, FormT<R>& f, Mono m, typename R::Elem v) {
    if (ring.is_zero(v))
        f.t.erase(m);
    else
        f.t[m] = std::move(v);
}

template <class R>
typename R::Elem form_coeff(const R& ring, const FormT<R>& f, Mono m) {
    auto it = f.t.find(m);
    return it == f.t.end() ? ring.zero() : it->second;
}

template <class R>
void form_accum(const R& ring, FormT<R>& f, Mono m, const typename R::Elem& v) {
    auto it = f.t.find(m);
    if (it == f.t.end()) {
        if (!ring.is_zero(v)) f.t.emplace(m, v);
        return;
    }
    it->second = ring.add(it->second, v);
    if (ring.is_zero(it->second)) f.t.erase(it);
}

template <class R>
FormT<R> form_add(const R& ring, const FormT<R>& a, const FormT<R>& b) {
    FormT<R> r = a;
    for (const auto& [m, v] : b.t) form_accum(ring, r, m, v);
    return r;
}

template <class R>
FormT<R> form_neg(const R& ring, const FormT<R>& a) {
    FormT<R> r;
    for (const auto& [m, v] : a.t) r.t.emplace(m, ring.neg(v));
    return r;
}

template <class R>
FormT<R> form_sub(const R& ring, const FormT<R>& a, const FormT<R>& b) {
    return form_add(ring, a, form_neg(ring, b));
}

template <class R>
FormT<R> form_scale(const R& ring, const FormT<R>& a, const typename R::Elem& s) {
    FormT<R> r;
    if (ring.is_zero(s)) return r;
    for (const auto& [m, v] : a.t) {
        auto w = ring.mul(v, s);
        if (!ring.is_zero(w)) r.t.emplace(m, std::move(w));
    }
    return r;
}

template <class R>
FormT<R> form_scale_rat(const R& ring, const FormT<R>& a, const Rat& s) {
    return form_scale(ring, a, ring.from_rat(s));
}

template <class R>
FormT<R> wedge(const R& ring, const FormT<R>& a, const FormT<R>& b) {
    FormT<R> r;
    for (const auto& [ma, va] : a.t)
        for (const auto& [mb, vb] : b.t) {
            if (ma & mb) continue;
            auto w = ring.mul(va, vb);
            if (wedge_sign(ma, mb) < 0) w = ring.neg(w);
            form_accum(ring, r, static_cast<Mono>(ma | mb), w);
        }
    return r;
}

template <class R>
FormT<R> form_one(const R& ring) {
    FormT<R> r;
    r.t.emplace(0, ring.one());
    return r;
}

template <class R>
FormT<R> degree_part(const FormT<R>& f, int deg) {
    FormT<R> r;
    for (const auto& [m, v] : f.t)
        if (mono_degree(m) == deg) r.t.emplace(m, v);
    return r;
}

template <class R>
FormT<R> pq_part(const FormT<R>& f, int p, int q) {
    FormT<R> r;
    for (const auto& [m, v] : f.t)
        if (mono_p(m) == p && mono_q(m) == q) r.t.emplace(m, v);
    return r;
}

template <class R>
bool is_pure_pq(const FormT<R>& f, int p, int q) {
    for (const auto& [m, v] : f.t)
        if (mono_p(m) != p || mono_q(m) != q) return false;
    return true;
}

template <class R>
std::map<std::pair<int, int>, FormT<R>> bidegree_split(const FormT<R>& f) {
    std::map<std::pair<int, int>, FormT<R>> parts;
    for (const auto& [m, v] : f.t) parts[{mono_p(m), mono_q(m)}].t.emplace(m, v);
    return parts;
}

// Conjugation swaps dz_j and its bar partner and conjugates coefficients;
// an involution exchanging types (p,q) and (q,p).
template <class R>
FormT<R> conj_form(const R& ring, const FormT<R>& f) {
    FormT<R> r;
    for (const auto& [m, v] : f.t) {
        const Mono flipped = static_cast<Mono>(((m & 0x0F) << 4) | (m >> 4));
        // Sign of re-sorting the image of the ascending generator sequence.
        std::vector<int> img;
        for (int bit = 0; bit < 8; ++bit)
            if (m & (1u << bit)) img.push_back(bit < 4 ? bit + 4 : bit - 4);
        int inv = 0;
        for (size_t i = 0; i < img.size(); ++i)
            for (size_t j = i + 1; j < img.size(); ++j)
                if (img[i] > img[j]) ++inv;
        auto w = ring.conj(v);
        if (inv & 1) w = ring.neg(w);
        r.t.emplace(flipped, std::move(w));
    }
    return r;
}

// Substitution dz_j -> sum_k A_jk dw_k + B_jk dwbar_k; the images of the
// conjugate generators are forced to be the conjugates of these.
template <class R>
struct LinMapT {
    std::array<FormT<R>, 4> z_img;
};

using LinMap = LinMapT<SplitRing>;

template <class R>
std::array<FormT<R>, 8> linmap_images(const R& ring, const LinMapT<R>& m) {
    std::array<FormT<R>, 8> img;
    for (int j = 0; j < 4; ++j) {
        img[j] = m.z_img[j];
        img[j + 4] = conj_form(ring, m.z_img[j]);
    }
    return img;
}

template <class R>
LinMapT<R> linmap_identity(const R& ring) {
    LinMapT<R> m;
    for (int j = 0; j < 4; ++j) form_set(ring, m.z_img[j], static_cast<Mono>(1u << j), ring.one());
    return m;
}

// Diagonal substitution dz_j -> factor_j dz_j.
template <class R>
LinMapT<R> linmap_diag(const R& ring, const std::array<typename R::Elem, 4>& factors) {
    LinMapT<R> m;
    for (int j = 0; j < 4; ++j)
        form_set(ring, m.z_img[j], static_cast<Mono>(1u << j), factors[j]);
    return m;
}

template <class R>
FormT<R> pullback(const R& ring, const LinMapT<R>& m, const FormT<R>& f) {
    const auto img = linmap_images(ring, m);
    FormT<R> out;
    for (const auto& [mono, coeff] : f.t) {
        FormT<R> prod = form_one(ring);
        for (int bit = 0; bit < 8 && !prod.is_zero(); ++bit)
            if (mono & (1u << bit)) prod = wedge(ring, prod, img[bit]);
        for (const auto& [pm, pv] : prod.t) form_accum(ring, out, pm, ring.mul(coeff, pv));
    }
    return out;
}

// apply(compose(m, n), f) = apply(n, apply(m, f)): substitute m, then n.
template <class R>
LinMapT<R> linmap_compose(const R& ring, const LinMapT<R>& m, const LinMapT<R>& n) {
    LinMapT<R> r;
    for (int j = 0; j < 4; ++j) r.z_img[j] = pullback(ring, n, m.z_img[j]);
    return r;
}

// --- operations specific to the splitting-field coefficients -------------

// Coefficient of f against the reference top form theta ^ thetabar, whose
// monomial coefficient is 1/delta on the full generator set.
inline SplitElem pair_top(const FieldContext& F, const Form& f) {
    SplitRing ring{&F};
    return F.k().delta * form_coeff(ring, f, Mono{0xFF});
}

// Forms on the real locus: four generators dt_1..dt_4, low bits.
struct RealForm {
    std::map<uint8_t, SplitElem> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const RealForm& o) const { return t == o.t; }
};

// Substitute dz_j -> dt_j and dzbar_j -> dt_j.
inline RealForm restrict_to_Y(const FieldContext& F, const Form& f) {
    RealForm out;
    for (const auto& [m, v] : f.t) {
        if ((m & 0x0F) & (m >> 4)) continue;  // dt_j ^ dt_j = 0
        std::vector<int> img;
        for (int bit = 0; bit < 8; ++bit)
            if (m & (1u << bit)) img.push_back(bit & 3);
        int inv = 0;
        for (size_t i = 0; i < img.size(); ++i)
            for (size_t j = i + 1; j < img.size(); ++j)
                if (img[i] > img[j]) ++inv;
        const uint8_t target = static_cast<uint8_t>((m & 0x0F) | (m >> 4));
        SplitElem w = inv & 1 ? -v : v;
        auto it = out.t.find(target);
        if (it == out.t.end()) {
            if (!w.is_zero()) out.t.emplace(target, std::move(w));
        } else {
            it->second += w;
            if (it->second.is_zero()) out.t.erase(it);
        }
    }
    return out;
}

// exp of a two-form, truncated above the top degree.
inline Form exp_two_form(const FieldContext& F, const Form& a) {
    SplitRing ring{&F};
    Form acc = form_one(ring), power = form_one(ring);
    Rat factorial(1);
    for (int k = 1; k <= 4; ++k) {
        power = wedge(ring, power, a);
        if (power.is_zero()) break;
        factorial *= k;
        acc = form_add(ring, acc, form_scale_rat(ring, power, Rat(1) / factorial));
    }
    return acc;
}

// Chern character of an integer combination of line bundles given by their
// first Chern classes.
inline Form ch_combination(const FieldContext& F,
                           const std::vector<std::pair<Rat, Form>>& terms) {
    SplitRing ring{&F};
    Form out;
    for (const auto& [mult, cls] : terms)
        out = form_add(ring, out, form_scale_rat(ring, exp_two_form(F, cls), mult));
    return out;
}

// First two Chern classes from a Chern character: c1 = ch_1,
// c2 = c1^2/2 - ch_2.
inline std::pair<Form, Form> chern_parts(const FieldContext& F, const Form& ch, const Rat& rank) {
    SplitRing ring{&F};
    const Form deg0 = degree_part(ch, 0);
    const SplitElem lead = form_coeff(ring, deg0, Mono{0});
    if (!(lead == FieldContext::from_rat(rank)))
        throw RankMismatch("degree-0 part of ch does not equal the stated rank");
    const Form c1 = degree_part(ch, 2);
    Form c2 = form_scale_rat(ring, wedge(ring, c1, c1), rat(1, 2));
    c2 = form_sub(ring, c2, degree_part(ch, 4));
    return {c1, c2};
}

}  // namespace fourfold
