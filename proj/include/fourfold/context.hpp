#pragma once

#include "fourfold/cube.hpp"

namespace fourfold {

// Everything the claim verifiers consume: the admissible quartic, the exact
// field arithmetic, the embedding combinatorics and the standard forms.
// Immutable after construction.
struct Context {
    Quartic quartic;
    GateReport gate;
    FieldContext F;
    CubeModel cube;

    Form omega;      // positive rational (1,1) polarization form
    Form theta;      // holomorphic volume form, (1/D) dz1 dz2 dz3 dz4
    Form theta_bar;
    Form big_m;      // D (dz1 dzb2 dz3 dzb4 + dzb1 dz2 dzb3 dz4)
    Form big_m_prime;
    Form a1;         // equivariant degree-2 class seeded with h3 (x1-x3)
    Form a2;         // the i c D twist of a1, at c = 1
    Form cayley;     // omega^2/2 + 4 Re(theta)

    std::array<SplitElem, 4> metric;      // omega = i sum metric_j dz_j dzb_j
    std::array<SplitElem, 4> metric_inv;
    Orbit orbit13;   // orbit of (top1, top3)
    Orbit orbit_m;   // orbit of (top1, top3, bot2, bot4)

    explicit Context(const Quartic& q)
        : quartic(q), gate(gate_quartic(q)), F(q), cube(build_cube_model()) {
        if (!(gate.irreducible && gate.four_real_roots && gate.galois_s4))
            throw DegenerateQuartic("context requires an admissible quartic");
        const FieldConstants& k = F.k();
        SplitRing ring{&F};

        const SplitElem iD_over_delta = Rat(1) / k.delta * k.iD;
        for (int j = 0; j < 4; ++j) {
            const int sgn = j % 2 ? -1 : 1;  // alternating +,-,+,- down the diagonal
            form_set(ring, omega, static_cast<Mono>((1u << j) | (1u << (j + 4))),
                     F.mul(Rat(sgn) * iD_over_delta, k.mu[j]));
            metric[j] = Rat(sgn) / k.delta * F.mul(k.D, k.mu[j]);
            metric_inv[j] = F.inv(metric[j]);
        }

        form_set(ring, theta, Mono{0x0F}, Rat(1) / k.delta * k.D);
        theta_bar = conj_form(ring, theta);

        // D (dz1 dzb2 dz3 dzb4 + dzb1 dz2 dzb3 dz4) on sorted monomials
        form_set(ring, big_m, Mono{0xA5}, -k.D);
        form_set(ring, big_m, Mono{0x5A}, -k.D);
        form_set(ring, big_m_prime, Mono{0xA5}, -FieldContext::unit_i());
        form_set(ring, big_m_prime, Mono{0x5A}, FieldContext::unit_i());

        orbit13 = orbit_of(cube, IndexSeq{0, 2});
        orbit_m = orbit_of(cube, IndexSeq{0, 2, 5, 7});

        const SplitElem seed = F.mul(k.h3, F.x(0) - F.x(2));
        a1 = expand_seed(F, cube, orbit13, seed);
        a2 = expand_seed(F, cube, orbit13, F.mul(k.iD, seed));

        Form omega_sq = wedge(ring, omega, omega);
        cayley = form_add(ring, form_scale_rat(ring, omega_sq, rat(1, 2)),
                          form_scale_rat(ring, form_add(ring, theta, theta_bar), rat(2)));
    }

    SplitRing ring() const { return SplitRing{&F}; }

    bool in_F(const SplitElem& u) const { return is_in_F(F, cube, u); }
    SplitElem embed(const SplitElem& u, Vertex v) const {
        return embedding_of(F, cube, u, v);
    }

    // Complex multiplication by a: the diagonal substitution by the
    // conjugates of a across the embeddings.
    LinMap isogeny_map(const SplitElem& a) const {
        std::array<SplitElem, 4> factors;
        for (int j = 0; j < 4; ++j) factors[j] = embed(a, static_cast<Vertex>(j));
        return linmap_diag(ring(), factors);
    }

    // Eigenvalue of the pullback on a single exterior monomial.
    SplitElem monomial_multiplier(const SplitElem& a, Mono mask) const {
        SplitElem out = FieldContext::one();
        for (int j = 0; j < 4; ++j) {
            if (mask & (1u << j)) out = F.mul(out, embed(a, static_cast<Vertex>(j)));
            if (mask & (1u << (j + 4)))
                out = F.mul(out, F.conj(embed(a, static_cast<Vertex>(j))));
        }
        return out;
    }

    // The antiholomorphic involution z -> zbar as a substitution.
    LinMap sigma1_map() const {
        LinMap m;
        SplitRing r = ring();
        for (int j = 0; j < 4; ++j)
            form_set(r, m.z_img[j], static_cast<Mono>(1u << (j + 4)), FieldContext::one());
        return m;
    }

    Form a2_for(const Rat& c) const {
        return form_scale_rat(ring(), a2, c);
    }
};

// Conjugate-linear involution on the six-dimensional (0,2) space, fixed by
// requiring alpha ^ star(alpha) = |alpha|^2 theta_bar with the metric on
// conjugate one-forms read off the polarization form.
inline Form star_02(const Context& ctx, const Form& f) {
    if (!f.is_zero() && !is_pure_pq(f, 0, 2)) throw NotPure02("star needs a pure (0,2) form");
    const FieldContext& F = ctx.F;
    SplitRing ring{&F};
    const SplitElem invD = Rat(1) / F.k().delta * F.k().D;
    Form out;
    for (const auto& [mask, coeff] : f.t) {
        std::array<int, 2> jk{}, lm{};
        int a = 0, b = 0;
        for (int j = 0; j < 4; ++j)
            if (mask & (1u << (j + 4)))
                jk[a++] = j;
            else
                lm[b++] = j;
        // sign sorting (j,k,l,m) to (1,2,3,4)
        const std::array<int, 4> seq{jk[0], jk[1], lm[0], lm[1]};
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (seq[i] > seq[j]) ++inv;
        SplitElem c = F.mul(invD, F.mul(ctx.metric_inv[jk[0]], ctx.metric_inv[jk[1]]));
        if (inv & 1) c = -c;
        const Mono target = static_cast<Mono>((1u << (lm[0] + 4)) | (1u << (lm[1] + 4)));
        form_accum(ring, out, target, F.mul(F.conj(coeff), c));
    }
    return out;
}

}  // namespace fourfold
