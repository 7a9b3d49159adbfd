#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "fourfold/context.hpp"

namespace fourfold {

// Formal variables of the coordinate-change coefficients. Conjugates are
// independent symbols; conjugation is the syntactic swap var <-> var + 8
// plus conjugation of the field coefficients.
enum ParamVar : int {
    kA12 = 0,  // alpha_{1bar 2}
    kA14 = 1,
    kA32 = 2,
    kA34 = 3,
    kT21 = 4,  // alphatilde_{2bar 1}
    kT23 = 5,
    kT41 = 6,
    kT43 = 7,
    kConjOffset = 8,
};

// Exponent tuple packed four bits per variable, variable v at nibble v.
using ParamKey = uint64_t;

inline int key_exp(ParamKey k, int var) { return static_cast<int>((k >> (4 * var)) & 0xF); }
inline ParamKey key_var(int var) { return ParamKey(1) << (4 * var); }
inline int key_degree(ParamKey k) {
    int d = 0;
    for (int v = 0; v < 16; ++v) d += key_exp(k, v);
    return d;
}
inline ParamKey key_conj(ParamKey k) { return (k << 32) | (k >> 32); }
inline bool key_divides(ParamKey a, ParamKey b) {  // a | b
    for (int v = 0; v < 16; ++v)
        if (key_exp(a, v) > key_exp(b, v)) return false;
    return true;
}

// Graded reverse lexicographic order with var0 > var1 > ... > var15.
inline bool key_less_grevlex(ParamKey a, ParamKey b) {
    const int da = key_degree(a), db = key_degree(b);
    if (da != db) return da < db;
    for (int v = 15; v >= 0; --v) {
        const int d = key_exp(a, v) - key_exp(b, v);
        if (d != 0) return d > 0;  // bigger exponent in the last variable = smaller
    }
    return false;
}

// Polynomial in the sixteen formal variables with splitting-field
// coefficients.
struct ParamPoly {
    std::map<ParamKey, SplitElem> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const ParamPoly& o) const { return t == o.t; }
};

inline ParamPoly pp_const(SplitElem v) {
    ParamPoly p;
    if (!v.is_zero()) p.t.emplace(0, std::move(v));
    return p;
}
inline ParamPoly pp_rat(const Rat& v) { return pp_const(FieldContext::from_rat(v)); }
inline ParamPoly pp_var(int var) {
    ParamPoly p;
    p.t.emplace(key_var(var), FieldContext::one());
    return p;
}

inline void pp_accum(ParamPoly& p, ParamKey k, const SplitElem& v) {
    auto it = p.t.find(k);
    if (it == p.t.end()) {
        if (!v.is_zero()) p.t.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) p.t.erase(it);
}

inline ParamPoly pp_add(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [k, v] : b.t) pp_accum(r, k, v);
    return r;
}
inline ParamPoly pp_neg(const ParamPoly& a) {
    ParamPoly r;
    for (const auto& [k, v] : a.t) r.t.emplace(k, -v);
    return r;
}
inline ParamPoly pp_sub(const ParamPoly& a, const ParamPoly& b) { return pp_add(a, pp_neg(b)); }

inline ParamPoly pp_mul(const FieldContext& F, const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ka, va] : a.t)
        for (const auto& [kb, vb] : b.t) pp_accum(r, ka + kb, F.mul(va, vb));
    return r;
}

inline ParamPoly pp_scale(const FieldContext& F, const ParamPoly& a, const SplitElem& s) {
    ParamPoly r;
    for (const auto& [k, v] : a.t) {
        SplitElem w = F.mul(v, s);
        if (!w.is_zero()) r.t.emplace(k, std::move(w));
    }
    return r;
}

inline ParamPoly pp_conj(const FieldContext& F, const ParamPoly& a) {
    ParamPoly r;
    for (const auto& [k, v] : a.t) r.t.emplace(key_conj(k), F.conj(v));
    return r;
}

// Substitute an exact field value for every variable; conjugate variables
// receive the conjugate values.
inline SplitElem pp_specialize(const FieldContext& F, const ParamPoly& p,
                               const std::array<SplitElem, 16>& vals) {
    SplitElem out;
    for (const auto& [k, v] : p.t) {
        SplitElem term = v;
        for (int var = 0; var < 16; ++var)
            for (int e = 0; e < key_exp(k, var); ++e) term = F.mul(term, vals[var]);
        out += term;
    }
    return out;
}

inline std::array<SplitElem, 16> specialization(const FieldContext& F,
                                                const std::array<SplitElem, 8>& plain) {
    std::array<SplitElem, 16> vals;
    for (int v = 0; v < 8; ++v) {
        vals[v] = plain[v];
        vals[v + kConjOffset] = F.conj(plain[v]);
    }
    return vals;
}

// Substitute a polynomial for one variable (used for the omega relations).
inline ParamPoly pp_substitute(const FieldContext& F, const ParamPoly& p, int var,
                               const ParamPoly& replacement) {
    ParamPoly out;
    for (const auto& [k, v] : p.t) {
        const int e = key_exp(k, var);
        ParamPoly term;
        term.t.emplace(k - (ParamKey(e) << (4 * var)), v);
        for (int i = 0; i < e; ++i) term = pp_mul(F, term, replacement);
        out = pp_add(out, term);
    }
    return out;
}

inline ParamKey pp_leading_key(const ParamPoly& p) {
    ParamKey best = p.t.begin()->first;
    for (const auto& [k, v] : p.t)
        if (key_less_grevlex(best, k)) best = k;
    return best;
}

// Remainder of multivariate division by the listed polynomials under the
// graded reverse lexicographic order. A zero remainder certifies ideal
// membership.
inline ParamPoly reduce_by_conditions(const FieldContext& F, ParamPoly p,
                                      const std::vector<ParamPoly>& gens) {
    struct Lead {
        ParamKey key;
        SplitElem inv_coeff;
        const ParamPoly* poly;
    };
    std::vector<Lead> leads;
    for (const ParamPoly& g : gens) {
        if (g.is_zero()) continue;
        const ParamKey k = pp_leading_key(g);
        leads.push_back({k, F.inv(g.t.at(k)), &g});
    }
    ParamPoly remainder;
    while (!p.is_zero()) {
        const ParamKey lt = pp_leading_key(p);
        const SplitElem coeff = p.t.at(lt);
        bool divided = false;
        for (const Lead& l : leads) {
            if (!key_divides(l.key, lt)) continue;
            const ParamKey shift = lt - l.key;
            const SplitElem factor = F.mul(coeff, l.inv_coeff);
            // p -= factor * x^shift * gen
            for (const auto& [k, v] : l.poly->t)
                pp_accum(p, k + shift, -F.mul(factor, v));
            divided = true;
            break;
        }
        if (!divided) {
            pp_accum(remainder, lt, coeff);
            p.t.erase(lt);
        }
    }
    return remainder;
}

// Coefficient ring instance for forms with formal-parameter coefficients.
struct ParamRing {
    const FieldContext* F;

    using Elem = ParamPoly;
    Elem zero() const { return {}; }
    Elem one() const { return pp_rat(Rat(1)); }
    Elem from_rat(const Rat& v) const { return pp_rat(v); }
    bool is_zero(const Elem& e) const { return e.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return pp_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return pp_sub(a, b); }
    Elem neg(const Elem& a) const { return pp_neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return pp_mul(*F, a, b); }
    Elem conj(const Elem& a) const { return pp_conj(*F, a); }
};

using ParamForm = FormT<ParamRing>;
using ParamMap = LinMapT<ParamRing>;

// --- 2x2 matrices over the parameter ring ---------------------------------

using AlphaMatrix = std::array<std::array<ParamPoly, 2>, 2>;

inline AlphaMatrix alpha_vars() {
    return {{{pp_var(kA12), pp_var(kA14)}, {pp_var(kA32), pp_var(kA34)}}};
}
inline AlphaMatrix tilde_vars() {
    return {{{pp_var(kT21), pp_var(kT23)}, {pp_var(kT41), pp_var(kT43)}}};
}

inline AlphaMatrix mat_hat(const AlphaMatrix& a) {
    return {{{a[1][1], pp_neg(a[0][1])}, {pp_neg(a[1][0]), a[0][0]}}};
}
inline AlphaMatrix mat_conj(const FieldContext& F, const AlphaMatrix& a) {
    AlphaMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = pp_conj(F, a[i][j]);
    return r;
}
inline AlphaMatrix mat_add(const AlphaMatrix& a, const AlphaMatrix& b) {
    AlphaMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = pp_add(a[i][j], b[i][j]);
    return r;
}
inline AlphaMatrix mat_mul(const FieldContext& F, const AlphaMatrix& a, const AlphaMatrix& b) {
    AlphaMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = pp_add(pp_mul(F, a[i][0], b[0][j]), pp_mul(F, a[i][1], b[1][j]));
    return r;
}
inline AlphaMatrix mat_scale(const FieldContext& F, const AlphaMatrix& a, const SplitElem& s) {
    AlphaMatrix r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = pp_scale(F, a[i][j], s);
    return r;
}
inline ParamPoly mat_det(const FieldContext& F, const AlphaMatrix& a) {
    return pp_sub(pp_mul(F, a[0][0], a[1][1]), pp_mul(F, a[0][1], a[1][0]));
}
inline ParamPoly mat_trace(const AlphaMatrix& a) { return pp_add(a[0][0], a[1][1]); }

// <A,B> = Tr(A Bhat) = det(A+B) - det A - det B.
inline ParamPoly pairing(const FieldContext& F, const AlphaMatrix& a, const AlphaMatrix& b) {
    return mat_trace(mat_mul(F, a, mat_hat(b)));
}

// The constant matrix H of the type-(1,1) conditions.
inline AlphaMatrix h_matrix(const FieldContext& F) {
    const FieldConstants& k = F.k();
    auto e = [&](const SplitElem& h, int i, int j, int sgn) {
        SplitElem v = F.mul(h, F.x(i) - F.x(j));
        return pp_const(sgn < 0 ? -v : v);
    };
    AlphaMatrix h;
    h[0][0] = e(k.h4, 1, 2, -1);  // -h4 (x2-x3)
    h[0][1] = e(k.h2, 2, 3, 1);   //  h2 (x3-x4)
    h[1][0] = e(k.h2, 0, 1, -1);  // -h2 (x1-x2)
    h[1][1] = e(k.h4, 0, 3, -1);  // -h4 (x1-x4)
    return h;
}

// cond1 = <alpha, H> - h3 (x2-x4) - h3 (x1-x3) det alpha, and the tilde
// analogue; both vanish exactly when the degree-2 classes stay type (1,1).
inline std::pair<ParamPoly, ParamPoly> condition_polys(const FieldContext& F) {
    const FieldConstants& k = F.k();
    const AlphaMatrix alpha = alpha_vars(), tilde = tilde_vars(), h = h_matrix(F);
    ParamPoly cond1 = pairing(F, alpha, h);
    cond1 = pp_sub(cond1, pp_const(F.mul(k.h3, F.x(1) - F.x(3))));
    cond1 = pp_sub(cond1, pp_scale(F, mat_det(F, alpha), F.mul(k.h3, F.x(0) - F.x(2))));
    ParamPoly cond2 = pairing(F, tilde, mat_hat(h));
    cond2 = pp_sub(cond2, pp_const(F.mul(k.h3, F.x(0) - F.x(2))));
    cond2 = pp_sub(cond2, pp_scale(F, mat_det(F, tilde), F.mul(k.h3, F.x(1) - F.x(3))));
    return {cond1, cond2};
}

// alphatilde = ((x1-x3)/(x2-x4)) hat(conj(alpha)); satisfies the second
// condition once alpha satisfies the first.
inline AlphaMatrix tilde_from_alpha(const FieldContext& F, const AlphaMatrix& alpha) {
    const SplitElem ratio = F.div(F.x(0) - F.x(2), F.x(1) - F.x(3));
    return mat_scale(F, mat_hat(mat_conj(F, alpha)), ratio);
}

// The substitution dz -> dw with formal coefficients: z1, z3 mix with
// conjugates of w2, w4 through alpha; z2, z4 with conjugates of w1, w3
// through alphatilde.
inline ParamMap coordinate_change(const FieldContext& F) {
    ParamRing ring{&F};
    ParamMap m;
    auto set = [&](int row, int wbit, ParamPoly coeff) {
        form_set(ring, m.z_img[row], static_cast<Mono>(1u << wbit), std::move(coeff));
    };
    set(0, 0, ring.one());
    set(0, 5, pp_var(kA12 + kConjOffset));
    set(0, 7, pp_var(kA14 + kConjOffset));
    set(2, 2, ring.one());
    set(2, 5, pp_var(kA32 + kConjOffset));
    set(2, 7, pp_var(kA34 + kConjOffset));
    set(1, 1, ring.one());
    set(1, 4, pp_var(kT21 + kConjOffset));
    set(1, 6, pp_var(kT23 + kConjOffset));
    set(3, 3, ring.one());
    set(3, 4, pp_var(kT41 + kConjOffset));
    set(3, 6, pp_var(kT43 + kConjOffset));
    return m;
}

inline ParamForm lift_form(const FieldContext& F, const Form& f) {
    ParamForm out;
    for (const auto& [m, v] : f.t) out.t.emplace(m, pp_const(v));
    return out;
}

inline Form specialize_form(const FieldContext& F, const ParamForm& f,
                            const std::array<SplitElem, 16>& vals) {
    SplitRing ring{&F};
    Form out;
    for (const auto& [m, v] : f.t) form_accum(ring, out, m, pp_specialize(F, v, vals));
    return out;
}

// The (2,0) and (0,2) coefficient polynomials of a pulled-back two-form.
struct TypeParts {
    std::vector<ParamPoly> part20, part02;
};

inline TypeParts symbolic_type_parts(const FieldContext& F, const Form& f) {
    ParamRing ring{&F};
    const ParamForm pulled = pullback(ring, coordinate_change(F), lift_form(F, f));
    TypeParts parts;
    for (const auto& [m, v] : pulled.t) {
        if (mono_p(m) == 2 && mono_q(m) == 0) parts.part20.push_back(v);
        if (mono_p(m) == 0 && mono_q(m) == 2) parts.part02.push_back(v);
    }
    return parts;
}

// The distinguished exact solution of the conditions.
inline std::array<std::array<SplitElem, 2>, 2> alpha_star(const FieldContext& F) {
    const FieldConstants& k = F.k();
    if (k.h3.is_zero()) throw DegenerateH3("alpha* needs h3 != 0");
    const SplitElem inv13 = F.inv(F.x(0) - F.x(2));
    const SplitElem f4 = FieldContext::one() - Rat(2) * F.div(k.h4, k.h3);
    const SplitElem f2 = FieldContext::one() - Rat(2) * F.div(k.h2, k.h3);
    std::array<std::array<SplitElem, 2>, 2> a;
    a[0][0] = F.mul(inv13, F.mul(F.x(1) - F.x(2), f4));
    a[0][1] = -F.mul(inv13, F.mul(F.x(2) - F.x(3), f2));
    a[1][0] = F.mul(inv13, F.mul(F.x(0) - F.x(1), f2));
    a[1][1] = F.mul(inv13, F.mul(F.x(0) - F.x(3), f4));
    return a;
}

inline AlphaMatrix mat_const(const std::array<std::array<SplitElem, 2>, 2>& v) {
    AlphaMatrix m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = pp_const(v[i][j]);
    return m;
}

// Specialization assigning alpha the given exact entries and alphatilde the
// derived matrix.
inline std::array<SplitElem, 16> alpha_specialization(
    const FieldContext& F, const std::array<std::array<SplitElem, 2>, 2>& alpha) {
    const AlphaMatrix tilde = tilde_from_alpha(F, mat_const(alpha));
    std::array<SplitElem, 8> plain;
    plain[kA12] = alpha[0][0];
    plain[kA14] = alpha[0][1];
    plain[kA32] = alpha[1][0];
    plain[kA34] = alpha[1][1];
    plain[kT21] = tilde[0][0].is_zero() ? SplitElem{} : tilde[0][0].t.at(0);
    plain[kT23] = tilde[0][1].is_zero() ? SplitElem{} : tilde[0][1].t.at(0);
    plain[kT41] = tilde[1][0].is_zero() ? SplitElem{} : tilde[1][0].t.at(0);
    plain[kT43] = tilde[1][1].is_zero() ? SplitElem{} : tilde[1][1].t.at(0);
    return specialization(F, plain);
}

// Scalars and matrices of the inverse coordinate change, and the almost
// complex structure it induces, at an exact specialization of alpha.
struct InverseTransform {
    SplitElem c, c_tilde;
    std::array<std::array<SplitElem, 2>, 2> beta, beta_tilde;
    LinMap J;
};

inline InverseTransform inverse_transform(const Context& ctx,
                                          const std::array<std::array<SplitElem, 2>, 2>& alpha) {
    const FieldContext& F = ctx.F;
    const SplitElem ratio = F.div(F.x(0) - F.x(2), F.x(1) - F.x(3));
    const SplitElem det =
        F.mul(alpha[0][0], alpha[1][1]) - F.mul(alpha[0][1], alpha[1][0]);
    const SplitElem s = F.mul(ratio, F.conj(det));
    if ((FieldContext::one() - s).is_zero())
        throw SingularTransform("det alpha equals the excluded ratio");
    InverseTransform out;
    out.c = F.inv(FieldContext::one() - s);
    out.c_tilde = F.conj(out.c);

    // alphatilde at the specialization
    std::array<std::array<SplitElem, 2>, 2> tilde;
    tilde[0][0] = F.mul(ratio, F.conj(alpha[1][1]));
    tilde[0][1] = -F.mul(ratio, F.conj(alpha[0][1]));
    tilde[1][0] = -F.mul(ratio, F.conj(alpha[1][0]));
    tilde[1][1] = F.mul(ratio, F.conj(alpha[0][0]));

    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            out.beta[i][j] = -F.mul(out.c_tilde, alpha[i][j]);
            out.beta_tilde[i][j] = -F.mul(out.c, tilde[i][j]);
        }

    SplitRing ring = ctx.ring();
    const SplitElem i_unit = FieldContext::unit_i();
    const SplitElem two_i = Rat(2) * i_unit;
    LinMap j_map;
    const int zrow[2] = {0, 2}, trow[2] = {1, 3};
    const SplitElem diag_z = F.mul(i_unit, Rat(2) * out.c - FieldContext::one());
    const SplitElem diag_t = F.mul(i_unit, Rat(2) * out.c_tilde - FieldContext::one());
    for (int r = 0; r < 2; ++r) {
        form_set(ring, j_map.z_img[zrow[r]], static_cast<Mono>(1u << zrow[r]), diag_z);
        for (int cI = 0; cI < 2; ++cI)
            form_set(ring, j_map.z_img[zrow[r]], static_cast<Mono>(1u << (trow[cI] + 4)),
                     F.mul(two_i, F.conj(out.beta[r][cI])));
        form_set(ring, j_map.z_img[trow[r]], static_cast<Mono>(1u << trow[r]), diag_t);
        for (int cI = 0; cI < 2; ++cI)
            form_set(ring, j_map.z_img[trow[r]], static_cast<Mono>(1u << (zrow[cI] + 4)),
                     F.mul(two_i, F.conj(out.beta_tilde[r][cI])));
    }
    out.J = j_map;
    return out;
}

// Residuals of the ellipsoid equation and of the excluded hyperplane at a
// point (v1, v2) = (alpha_{1bar2}, alpha_{3bar2}).
inline std::pair<SplitElem, SplitElem> ellipsoid_residual(const FieldContext& F,
                                                          const SplitElem& v1,
                                                          const SplitElem& v2) {
    const FieldConstants& k = F.k();
    const SplitElem q1 = F.div(F.x(0) - F.x(3), F.x(1) - F.x(2));
    const SplitElem q2 = F.div(F.x(2) - F.x(3), F.x(0) - F.x(1));
    const SplitElem norm =
        F.mul(q1, F.mul(v1, F.conj(v1))) + F.mul(q2, F.mul(v2, F.conj(v2)));
    SplitElem hyper = F.mul(k.h3, F.x(1) - F.x(3));
    hyper += F.mul(F.mul(k.h4, F.x(0) - F.x(3)), v1 + F.conj(v1));
    hyper += F.mul(F.mul(k.h2, F.x(2) - F.x(3)), v2 + F.conj(v2));
    const SplitElem ell = F.mul(F.mul(k.h3, F.x(0) - F.x(2)), norm) + hyper;
    return {ell, hyper};
}

}  // namespace fourfold
