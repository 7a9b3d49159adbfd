#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fourfold/forms.hpp"

namespace fourfold {

// Vertices 0..3 are the "top" embeddings z_1..z_4 (one per cube diagonal),
// 4..7 their conjugates. The generator index of forms.hpp coincides with
// the vertex index.
using Vertex = uint8_t;

inline Vertex bar(Vertex v) { return static_cast<Vertex>(v ^ 4); }
inline int diagonal_of(Vertex v) { return v & 3; }

using IndexSeq = std::vector<Vertex>;

// The symmetry group of the cube acting on the eight embedding labels,
// identified with S4 x {e,rho} so that rho is the antipodal map, the induced
// action on diagonals is sigma, and the conjugation signs of i*D across the
// embeddings follow the alternating pattern -(-1)^j / (-1)^j.
struct CubeModel {
    std::array<std::array<Vertex, 8>, 48> act;  // by GaloisElem::index()
    std::array<GaloisElem, 8> rep;              // rep[v] maps vertex 0 to v
    std::vector<GaloisElem> stabilizer;         // of vertex 0; order 6

    const std::array<Vertex, 8>& action(const GaloisElem& g) const { return act[g.index()]; }
    Vertex apply(const GaloisElem& g, Vertex v) const { return act[g.index()][v]; }

    IndexSeq apply(const GaloisElem& g, const IndexSeq& s) const {
        IndexSeq out(s.size());
        for (size_t i = 0; i < s.size(); ++i) out[i] = apply(g, s[i]);
        return out;
    }
};

namespace cube_detail {

using Pt = std::array<int, 3>;

inline int pt_index(const Pt& p) {
    return (p[0] > 0 ? 1 : 0) | (p[1] > 0 ? 2 : 0) | (p[2] > 0 ? 4 : 0);
}

inline Pt pt_of_index(int i) {
    return {i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1};
}

inline Pt negate(const Pt& p) { return {-p[0], -p[1], -p[2]}; }

// Signed permutation matrix: out[i] = sign[i] * in[perm[i]].
struct SignedPerm {
    std::array<int, 3> perm;
    std::array<int, 3> sign;

    Pt operator()(const Pt& p) const {
        return {sign[0] * p[perm[0]], sign[1] * p[perm[1]], sign[2] * p[perm[2]]};
    }
    int det() const {
        int d = sign[0] * sign[1] * sign[2];
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) ++inv;
        return inv & 1 ? -d : d;
    }
};

// Geometric diagonal id: the key of the endpoint with first coordinate +1.
inline int geo_diag(const Pt& p) {
    const Pt q = p[0] > 0 ? p : negate(p);
    return (q[1] > 0 ? 1 : 0) | (q[2] > 0 ? 2 : 0);
}

}  // namespace cube_detail

// Exhaustive search over the 4! * 2^4 diagonal labelings / face assignments
// for one satisfying every invariant, including the conjugation sign
// pattern. Purely combinatorial; the field-theoretic statements are checked
// against the actual Galois action by the claim suite.
inline CubeModel build_cube_model() {
    using namespace cube_detail;

    std::vector<SignedPerm> rotations;
    std::array<int, 3> perm{0, 1, 2};
    do {
        for (int smask = 0; smask < 8; ++smask) {
            SignedPerm sp{perm, {smask & 1 ? -1 : 1, smask & 2 ? -1 : 1, smask & 4 ? -1 : 1}};
            if (sp.det() == 1) rotations.push_back(sp);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // rotation -> permutation of geometric diagonals
    std::map<std::array<int, 4>, int> rot_by_diag_perm;
    for (size_t r = 0; r < rotations.size(); ++r) {
        std::array<int, 4> dp{};
        for (int d = 0; d < 4; ++d) {
            Pt rep = pt_of_index(1 | (d & 1 ? 2 : 0) | (d & 2 ? 4 : 0));
            dp[d] = geo_diag(rotations[r](rep));
        }
        rot_by_diag_perm[dp] = static_cast<int>(r);
    }

    const auto& group = all_galois();
    std::array<int, 4> diag_assign{0, 1, 2, 3};
    do {
        for (int topmask = 0; topmask < 16; ++topmask) {
            std::array<Pt, 8> label_pt;
            std::array<int, 8> label_of_pt{};
            for (int j = 0; j < 4; ++j) {
                Pt rep = pt_of_index(1 | (diag_assign[j] & 1 ? 2 : 0) |
                                     (diag_assign[j] & 2 ? 4 : 0));
                label_pt[j] = (topmask >> j) & 1 ? negate(rep) : rep;
                label_pt[j + 4] = negate(label_pt[j]);
            }
            for (int v = 0; v < 8; ++v) label_of_pt[pt_index(label_pt[v])] = v;

            CubeModel model;
            bool ok = true;
            for (const GaloisElem& g : group) {
                // rotation realizing sigma on the labeled diagonals
                std::array<int, 4> geo_perm{};
                for (int d = 0; d < 4; ++d) geo_perm[d] = -1;
                for (int j = 0; j < 4; ++j)
                    geo_perm[diag_assign[j]] = diag_assign[g.sigma(j)];
                auto it = rot_by_diag_perm.find(geo_perm);
                if (it == rot_by_diag_perm.end()) {
                    ok = false;
                    break;
                }
                const SignedPerm& rot = rotations[it->second];
                for (Vertex v = 0; v < 8; ++v) {
                    Pt img = rot(label_pt[v]);
                    if (g.eps) img = negate(img);
                    model.act[g.index()][v] = static_cast<Vertex>(label_of_pt[pt_index(img)]);
                }
            }
            if (!ok) continue;

            // invariants: rho = bar, diagonal action = sigma
            for (const GaloisElem& g : group) {
                const auto& a = model.act[g.index()];
                for (Vertex v = 0; v < 8 && ok; ++v) {
                    if (diagonal_of(a[v]) != g.sigma(diagonal_of(v))) ok = false;
                    if (g.sigma == Perm4{} && g.eps && a[v] != bar(v)) ok = false;
                }
                if (!ok) break;
            }
            if (!ok) continue;

            // stabilizer of vertex 0 has order 6 and trivial character
            model.stabilizer.clear();
            for (const GaloisElem& g : group)
                if (model.act[g.index()][0] == 0) model.stabilizer.push_back(g);
            if (model.stabilizer.size() != 6) continue;
            for (const GaloisElem& h : model.stabilizer)
                if (h.chi() != 1) ok = false;
            if (!ok) continue;

            // conjugation sign pattern across all eight embeddings
            std::array<bool, 8> have_rep{};
            for (const GaloisElem& g : group) {
                const Vertex v = model.act[g.index()][0];
                const int j = diagonal_of(v) + 1;
                const int expect = v < 4 ? -((j % 2 == 0) ? 1 : -1) : ((j % 2 == 0) ? 1 : -1);
                if (g.chi() != expect) {
                    ok = false;
                    break;
                }
                if (!have_rep[v]) {
                    model.rep[v] = g;
                    have_rep[v] = true;
                }
            }
            if (!ok) continue;
            for (bool h : have_rep)
                if (!h) ok = false;  // transitivity
            if (!ok) continue;

            // group homomorphism into Sym(8)
            for (const GaloisElem& g : group) {
                for (const GaloisElem& h : group) {
                    const GaloisElem gh = g * h;
                    for (Vertex v = 0; v < 8; ++v)
                        if (model.act[gh.index()][v] !=
                            model.act[g.index()][model.act[h.index()][v]])
                            ok = false;
                    if (!ok) break;
                }
                if (!ok) break;
            }
            if (ok) return model;
        }
    } while (std::next_permutation(diag_assign.begin(), diag_assign.end()));
    throw NoConsistentLabeling("no labeling satisfies the sign pattern");
}

inline bool is_in_F(const FieldContext& F, const CubeModel& model, const SplitElem& u) {
    for (const GaloisElem& h : model.stabilizer)
        if (!(F.galois(h, u) == u)) return false;
    return true;
}

// The image of u under the embedding attached to vertex v; well defined on
// the subfield F fixed by the stabilizer.
inline SplitElem embedding_of(const FieldContext& F, const CubeModel& model, const SplitElem& u,
                              Vertex v) {
    if (!is_in_F(F, model, u)) throw NotInF("element moved by the vertex stabilizer");
    return F.galois(model.rep[v], u);
}

// Orbit of a sequence of distinct vertices under the group action combined
// with reordering, with the bookkeeping needed for the antisymmetry
// constraints and the equivariant extension.
struct Orbit {
    IndexSeq base;
    std::vector<IndexSeq> seqs;  // deduplicated, lexicographic order
    // one group element per underlying vertex set, with its image sequence
    std::vector<std::pair<GaloisElem, IndexSeq>> transversal;
    // setwise stabilizer elements with the sign of the induced reordering
    std::vector<std::pair<GaloisElem, int>> stab;

    size_t size() const { return seqs.size(); }
};

namespace cube_detail {

inline int sort_sign(const IndexSeq& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv & 1 ? -1 : 1;
}

inline Mono seq_mask(const IndexSeq& s) {
    Mono m = 0;
    for (Vertex v : s) m |= static_cast<Mono>(1u << v);
    return m;
}

}  // namespace cube_detail

// Orbit of the joint action of the group and of reorderings. Coefficient
// functions of forms are alternating, so a sequence and its reorderings
// carry the same datum up to sign; closing the orbit under reordering is
// what makes the dimension formula |R|/r! exact for every orbit.
inline Orbit orbit_of(const CubeModel& model, const IndexSeq& base) {
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i + 1; j < base.size(); ++j)
            if (base[i] == base[j]) throw Error("orbit base entries must be distinct");
    Orbit orbit;
    orbit.base = base;
    std::set<IndexSeq> seen;
    std::set<Mono> sets_seen;
    for (const GaloisElem& g : all_galois()) {
        IndexSeq img = model.apply(g, base);
        const Mono mask = cube_detail::seq_mask(img);
        if (mask == cube_detail::seq_mask(base)) {
            // sign of the reordering: img[i] = base[pi(i)]
            int inv = 0;
            std::vector<int> pos(img.size());
            for (size_t i = 0; i < img.size(); ++i)
                for (size_t j = 0; j < base.size(); ++j)
                    if (img[i] == base[j]) pos[i] = static_cast<int>(j);
            for (size_t i = 0; i < pos.size(); ++i)
                for (size_t j = i + 1; j < pos.size(); ++j)
                    if (pos[i] > pos[j]) ++inv;
            orbit.stab.emplace_back(g, inv & 1 ? -1 : 1);
        }
        if (sets_seen.insert(mask).second) {
            orbit.transversal.emplace_back(g, img);
            IndexSeq sorted = img;
            std::sort(sorted.begin(), sorted.end());
            do {
                seen.insert(sorted);
            } while (std::next_permutation(sorted.begin(), sorted.end()));
        }
    }
    orbit.seqs.assign(seen.begin(), seen.end());
    return orbit;
}

// The unique equivariant antisymmetric extension of a seed value at the
// base sequence, written on canonical (sorted) monomials.
inline Form expand_seed(const FieldContext& F, const CubeModel& model, const Orbit& orbit,
                        const SplitElem& seed) {
    for (const auto& [g, sign] : orbit.stab) {
        SplitElem expect = sign < 0 ? -seed : seed;
        if (!(F.galois(g, seed) == expect))
            throw IncompatibleSeed("seed violates a stabilizer constraint");
    }
    SplitRing ring{&F};
    Form f;
    for (const auto& [g, img] : orbit.transversal) {
        SplitElem value = F.galois(g, seed);
        if (cube_detail::sort_sign(img) < 0) value = -value;
        form_set(ring, f, cube_detail::seq_mask(img), std::move(value));
    }
    return f;
}

namespace cube_detail {

// Small generating set of the setwise stabilizer; cuts the constraint
// system down before the rational elimination.
inline std::vector<std::pair<GaloisElem, int>> stab_generators(const Orbit& orbit) {
    std::vector<std::pair<GaloisElem, int>> gens;
    std::map<int, GaloisElem> generated;
    generated.emplace(GaloisElem{}.index(), GaloisElem{});
    auto close = [&generated]() {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<GaloisElem> elems;
            elems.reserve(generated.size());
            for (const auto& [idx, e] : generated) elems.push_back(e);
            for (const GaloisElem& x : elems)
                for (const GaloisElem& y : elems) {
                    const GaloisElem xy = x * y;
                    if (generated.emplace(xy.index(), xy).second) grew = true;
                }
        }
    };
    for (const auto& [g, sign] : orbit.stab) {
        if (generated.count(g.index())) continue;
        gens.emplace_back(g, sign);
        generated.emplace(g.index(), g);
        close();
    }
    return gens;
}

}  // namespace cube_detail

// Q-dimension and basis of the space of equivariant antisymmetric maps on
// the orbit, parametrized by the seed value at the base sequence.
inline std::vector<SplitElem> equivariant_seeds(const FieldContext& F, const Orbit& orbit) {
    const auto gens = cube_detail::stab_generators(orbit);
    QMatrix rows;
    for (const auto& [g, sign] : gens) {
        // (gal(g) - sign I) u = 0, columns indexed by basis monomials
        QMatrix block(48, std::vector<Rat>(48, Rat(0)));
        for (int i = 0; i < 48; ++i) {
            SplitElem e;
            e.c[i] = 1;
            const SplitElem img = F.galois(g, e);
            for (int k = 0; k < 48; ++k) block[k][i] = img.c[k];
            block[i][i] -= sign;
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        std::vector<SplitElem> basis(48);
        for (int i = 0; i < 48; ++i) basis[i].c[i] = 1;
        return basis;
    }
    std::vector<SplitElem> seeds;
    for (const auto& v : qnullspace(std::move(rows))) {
        SplitElem s;
        for (int k = 0; k < 48; ++k) s.c[k] = v[k];
        seeds.push_back(std::move(s));
    }
    return seeds;
}

inline std::vector<Form> equivariant_basis(const FieldContext& F, const CubeModel& model,
                                           const Orbit& orbit) {
    std::vector<Form> basis;
    for (const SplitElem& seed : equivariant_seeds(F, orbit))
        basis.push_back(expand_seed(F, model, orbit, seed));
    return basis;
}

// Rationality criterion: the coefficient system is covariant under the full
// group action on index sequences.
inline bool is_rational_form(const FieldContext& F, const CubeModel& model, const Form& f) {
    SplitRing ring{&F};
    for (const GaloisElem& g : all_galois()) {
        for (const auto& [mask, coeff] : f.t) {
            IndexSeq src;
            for (int bit = 0; bit < 8; ++bit)
                if (mask & (1u << bit)) src.push_back(static_cast<Vertex>(bit));
            IndexSeq img = model.apply(g, src);
            SplitElem expect = F.galois(g, coeff);
            if (cube_detail::sort_sign(img) < 0) expect = -expect;
            if (!(form_coeff(ring, f, cube_detail::seq_mask(img)) == expect)) return false;
        }
    }
    return true;
}

}  // namespace fourfold
