#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "fourfold/paramalg.hpp"

namespace fourfold {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { kVerifiedExact, kVerifiedNumeric, kFailed, kSkipped };

inline const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::kVerifiedExact: return "verified-exact";
        case ClaimStatus::kVerifiedNumeric: return "verified-numeric";
        case ClaimStatus::kFailed: return "failed";
        case ClaimStatus::kSkipped: return "skipped";
    }
    return "unknown";
}

struct ClaimReport {
    std::string id;
    std::string title;
    std::string anchor;
    ClaimStatus status = ClaimStatus::kSkipped;
    Json witness;
    double elapsed_ms = 0.0;

    bool verified() const {
        return status == ClaimStatus::kVerifiedExact || status == ClaimStatus::kVerifiedNumeric;
    }
};

struct RunOptions {
    int precision_bits = 128;
    int samples = 25;
    uint64_t seed = 0;
    long c_max = 20;
    long k1_max = 10;
    Rat omega4 = Rat(24);
};

inline Json json_rat(const Rat& r) { return to_string(r); }

inline Json json_elem(const SplitElem& u) {
    Json arr = Json::array();
    for (int k = 0; k < 48; ++k) arr.push_back(to_string(u.c[k]));
    return arr;
}

namespace claims_detail {

// (pi_a^* - (1+delta)^2)(pi_b^* + delta^2) applied through actual pullbacks.
inline Form apply_phi(const Context& ctx, const SplitElem& a, const Form& f) {
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat d = F.k().delta;
    const LinMap pa = ctx.isogeny_map(a), pb = ctx.isogeny_map(F.k().cm_b);
    Form g = form_add(ring, pullback(ring, pb, f), form_scale_rat(ring, f, d * d));
    return form_sub(ring, pullback(ring, pa, g), form_scale_rat(ring, g, (1 + d) * (1 + d)));
}

inline SplitElem pair_with_y(const Context& ctx, const Form& f) {
    const RealForm r = restrict_to_Y(ctx.F, f);
    auto it = r.t.find(0x0F);
    return it == r.t.end() ? SplitElem{} : it->second;
}

// Uniform small rationals, deterministic under the configured seed.
inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return rat(num(rng), den(rng));
}

inline SplitElem random_elem(const FieldContext&, std::mt19937_64& rng, int terms = 6) {
    std::uniform_int_distribution<int> idx(0, 47);
    SplitElem u;
    for (int t = 0; t < terms; ++t) u.c[idx(rng)] += random_rat(rng);
    return u;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

inline void set_status(ClaimReport& r, bool exact_ok, bool used_intervals = false) {
    r.status = exact_ok
                   ? (used_intervals ? ClaimStatus::kVerifiedNumeric : ClaimStatus::kVerifiedExact)
                   : ClaimStatus::kFailed;
}

}  // namespace claims_detail

// --- individual claim verifiers -------------------------------------------

inline ClaimReport claim_c01(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C01", "quartic admissibility gate", "number-field setup"};
    const GateReport& g = ctx.gate;
    r.witness = {{"irreducible", g.irreducible},
                 {"four_real_roots", g.four_real_roots},
                 {"galois_s4", g.galois_s4},
                 {"delta_integral", g.delta_integral},
                 {"delta", json_rat(g.delta)},
                 {"discriminant", json_rat(g.discriminant)},
                 {"real_root_count", g.real_root_count}};
    claims_detail::set_status(r, g.irreducible && g.four_real_roots && g.galois_s4);
    return r;
}

inline ClaimReport claim_c02(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C02", "conjugation signs across the embeddings", "embedding sign pattern"};
    const FieldContext& F = ctx.F;
    const SplitElem& iD = F.k().iD;
    bool ok = ctx.cube.stabilizer.size() == 6;
    for (const GaloisElem& h : ctx.cube.stabilizer) ok = ok && F.galois(h, iD) == iD;
    Json signs = Json::array();
    for (int v = 0; v < 8; ++v) {
        const SplitElem img = ctx.embed(iD, static_cast<Vertex>(v));
        const int j = (v & 3) + 1;
        const int expect = v < 4 ? -((j % 2 == 0) ? 1 : -1) : ((j % 2 == 0) ? 1 : -1);
        const bool match = img == (expect < 0 ? -iD : iD);
        ok = ok && match;
        signs.push_back(expect);
    }
    // rho acts as the bar involution
    const GaloisElem rho{Perm4{}, 1};
    for (Vertex v = 0; v < 8; ++v) ok = ok && ctx.cube.apply(rho, v) == bar(v);
    r.witness = {{"stabilizer_order", ctx.cube.stabilizer.size()}, {"signs", signs}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c03(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C03", "equivariant dimension formula, all orbits of length 1..4",
                  "dimension of the equivariant space"};
    const FieldContext& F = ctx.F;
    bool ok = true;
    Json per_length = Json::array();
    for (int len = 1; len <= 4; ++len) {
        std::set<Mono> seen;
        int orbits = 0, failures = 0;
        Json dims = Json::array();
        // enumerate underlying sets; each reordering-closed orbit is a set orbit
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) != len || seen.count(static_cast<Mono>(mask)))
                continue;
            IndexSeq base;
            for (int bit = 0; bit < 8; ++bit)
                if (mask & (1 << bit)) base.push_back(static_cast<Vertex>(bit));
            const Orbit orbit = orbit_of(ctx.cube, base);
            for (const auto& [g, img] : orbit.transversal)
                seen.insert(cube_detail::seq_mask(img));
            ++orbits;
            long fact = 1;
            for (int k = 2; k <= len; ++k) fact *= k;
            const long expect = static_cast<long>(orbit.size()) / fact;
            const long dim = static_cast<long>(equivariant_seeds(F, orbit).size());
            if (static_cast<long>(orbit.size()) % fact != 0 || dim != expect) ++failures;
            dims.push_back({{"orbit_size", orbit.size()}, {"dim", dim}, {"expected", expect}});
        }
        ok = ok && failures == 0;
        per_length.push_back({{"length", len}, {"orbits", orbits}, {"failures", failures},
                              {"detail", dims}});
    }
    r.witness = {{"per_length", per_length}};
    claims_detail::set_status(r, ok);
    return r;
}

namespace claims_detail {

// Q-basis of the rational classes of pure type (1,1).
inline std::vector<Form> ns_basis(const Context& ctx) {
    return equivariant_basis(ctx.F, ctx.cube, orbit_of(ctx.cube, IndexSeq{0, 4}));
}

// Flatten forms over a fixed monomial list into rows of rationals.
inline QMatrix flatten(const std::vector<Form>& forms, const std::vector<Mono>& monos) {
    QMatrix rows;
    for (const Form& f : forms) {
        std::vector<Rat> row;
        row.reserve(monos.size() * 48);
        for (Mono m : monos) {
            auto it = f.t.find(m);
            for (int k = 0; k < 48; ++k)
                row.push_back(it == f.t.end() ? Rat(0) : it->second.c[k]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<Mono> monos_of_degree(int deg) {
    std::vector<Mono> out;
    for (int m = 0; m < 256; ++m)
        if (__builtin_popcount(m) == deg) out.push_back(static_cast<Mono>(m));
    return out;
}

// Orbits (reordering-closed) of a given length whose monomials are all of
// balanced type (p,p).
inline std::vector<Orbit> balanced_orbits(const Context& ctx, int len) {
    std::vector<Orbit> out;
    std::set<Mono> seen;
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) != len || seen.count(static_cast<Mono>(mask))) continue;
        IndexSeq base;
        for (int bit = 0; bit < 8; ++bit)
            if (mask & (1 << bit)) base.push_back(static_cast<Vertex>(bit));
        Orbit orbit = orbit_of(ctx.cube, base);
        bool balanced = true;
        for (const auto& [g, img] : orbit.transversal) {
            const Mono m = cube_detail::seq_mask(img);
            seen.insert(m);
            if (mono_p(m) != mono_q(m)) balanced = false;
        }
        if (balanced) out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace claims_detail

inline ClaimReport claim_c04(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C04", "rational classes of type (1,1) have rank four",
                  "rank of the polarized lattice"};
    const FieldContext& F = ctx.F;
    // balanced-orbit route
    long balanced_dim = 0;
    for (const Orbit& orbit : claims_detail::balanced_orbits(ctx, 2))
        balanced_dim += static_cast<long>(equivariant_seeds(F, orbit).size());
    // kernel route: rational 2-classes whose (2,0) and (0,2) parts vanish
    std::vector<Form> all2;
    {
        std::set<Mono> seen;
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) != 2 || seen.count(static_cast<Mono>(mask))) continue;
            IndexSeq base;
            for (int bit = 0; bit < 8; ++bit)
                if (mask & (1 << bit)) base.push_back(static_cast<Vertex>(bit));
            Orbit orbit = orbit_of(ctx.cube, base);
            for (const auto& [g, img] : orbit.transversal)
                seen.insert(cube_detail::seq_mask(img));
            for (Form& f : equivariant_basis(F, ctx.cube, orbit)) all2.push_back(std::move(f));
        }
    }
    std::vector<Mono> impure;
    for (Mono m : claims_detail::monos_of_degree(2))
        if (mono_p(m) != 1) impure.push_back(m);
    std::vector<Form> impure_parts;
    for (const Form& f : all2) {
        Form g;
        for (Mono m : impure) {
            auto it = f.t.find(m);
            if (it != f.t.end()) g.t.emplace(m, it->second);
        }
        impure_parts.push_back(std::move(g));
    }
    const QMatrix proj = claims_detail::flatten(impure_parts, impure);
    const long kernel_dim = static_cast<long>(all2.size()) - qrank(proj);
    const bool ok = balanced_dim == 4 && kernel_dim == 4;
    r.witness = {{"balanced_orbit_dim", balanced_dim},
                 {"projection_kernel_dim", kernel_dim},
                 {"total_rational_2_classes", all2.size()}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c05(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C05", "the exotic (2,2) plane and its basis",
                  "two-dimensional space of non-product classes"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    bool ok = true;

    // dim of the orbit space carrying M and M'
    const long m_dim = static_cast<long>(equivariant_seeds(F, ctx.orbit_m).size());
    ok = ok && m_dim == 2;
    ok = ok && is_rational_form(F, ctx.cube, ctx.big_m) &&
         is_rational_form(F, ctx.cube, ctx.big_m_prime);
    ok = ok && is_pure_pq(ctx.big_m, 2, 2) && is_pure_pq(ctx.big_m_prime, 2, 2);

    // M, M' span the orbit space
    std::vector<Form> span = equivariant_basis(F, ctx.cube, ctx.orbit_m);
    const std::vector<Mono> m22 = claims_detail::monos_of_degree(4);
    {
        QMatrix base = claims_detail::flatten(span, m22);
        const int rank0 = qrank(base);
        QMatrix with_both = base;
        for (const Form* f : {&ctx.big_m, &ctx.big_m_prime})
            for (auto& row : claims_detail::flatten({*f}, m22)) with_both.push_back(row);
        ok = ok && rank0 == 2 && qrank(with_both) == 2;
    }

    // products of the rational (1,1) classes
    std::vector<Form> ns = claims_detail::ns_basis(ctx);
    std::vector<Form> products;
    for (size_t i = 0; i < ns.size(); ++i)
        for (size_t j = i; j < ns.size(); ++j) products.push_back(wedge(ring, ns[i], ns[j]));
    QMatrix prod_rows = claims_detail::flatten(products, m22);
    const int prod_rank = qrank(prod_rows);
    QMatrix with_m = prod_rows;
    for (auto& row : claims_detail::flatten({ctx.big_m}, m22)) with_m.push_back(row);
    const bool m_outside = qrank(with_m) == prod_rank + 1;
    QMatrix with_mp = prod_rows;
    for (auto& row : claims_detail::flatten({ctx.big_m_prime}, m22)) with_mp.push_back(row);
    const bool mp_outside = qrank(with_mp) == prod_rank + 1;
    QMatrix with_all = with_m;
    for (auto& row : claims_detail::flatten({ctx.big_m_prime}, m22)) with_all.push_back(row);
    const int full_rank = qrank(with_all);
    ok = ok && m_outside && mp_outside && full_rank == prod_rank + 2;

    // total rational (2,2) classes, from the balanced orbits
    long total22 = 0;
    for (const Orbit& orbit : claims_detail::balanced_orbits(ctx, 4))
        total22 += static_cast<long>(equivariant_seeds(F, orbit).size());
    const bool complement = total22 == prod_rank + 2;

    r.witness = {{"dim_exotic_plane", m_dim},
                 {"product_span_rank", prod_rank},
                 {"m_outside_products", m_outside},
                 {"m_prime_outside_products", mp_outside},
                 {"total_rational_22", total22},
                 {"products_plus_plane_exhaust", complement}};
    claims_detail::set_status(r, ok && complement);
    return r;
}

inline ClaimReport claim_c06(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C06", "isogeny action on the exotic plane", "pullback matrix on M, M'"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat d = F.k().delta;
    const LinMap pa = ctx.isogeny_map(F.k().cm_a);
    const Rat diag = (1 - d) * (1 - d) - 4 * d;
    const Form lhs_m = pullback(ring, pa, ctx.big_m);
    const Form rhs_m = form_add(ring, form_scale_rat(ring, ctx.big_m, diag),
                                form_scale_rat(ring, ctx.big_m_prime, 4 * (1 - d) * d));
    const Form lhs_mp = pullback(ring, pa, ctx.big_m_prime);
    const Form rhs_mp = form_add(ring, form_scale_rat(ring, ctx.big_m_prime, diag),
                                 form_scale_rat(ring, ctx.big_m, -4 * (1 - d)));
    const bool ok = lhs_m == rhs_m && lhs_mp == rhs_mp;
    r.witness = {{"matrix", {{"diag", json_rat(diag)},
                             {"m_to_mprime", json_rat(4 * (1 - d) * d)},
                             {"mprime_to_m", json_rat(-4 * (1 - d))}}}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c07(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C07", "invertibility of the isogeny matrix", "exchange of the two classes"};
    const Rat d = ctx.F.k().delta;
    const Rat diag = (1 - d) * (1 - d) - 4 * d;
    const Rat det = diag * diag + 16 * (1 - d) * (1 - d) * d;
    r.witness = {{"determinant", json_rat(det)}};
    claims_detail::set_status(r, det != 0);
    return r;
}

inline ClaimReport claim_c08(const Context& ctx, const RunOptions& opt) {
    ClaimReport r{"C08", "polarization form: rationality, positivity, normalization",
                  "positive rational (1,1) form"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    bool exact_ok = is_rational_form(F, ctx.cube, ctx.omega) && is_pure_pq(ctx.omega, 1, 1);
    // omega^4 / 4! = theta ^ thetabar
    const Form w2 = wedge(ring, ctx.omega, ctx.omega);
    const Form w4 = wedge(ring, w2, w2);
    exact_ok = exact_ok && form_scale_rat(ring, w4, rat(1, 24)) ==
                               wedge(ring, ctx.theta, ctx.theta_bar);
    // certified positivity of the metric coefficients
    bool positive = true;
    Json signs = Json::array();
    for (int j = 0; j < 4; ++j) {
        const int s = F.sign_at_identity(ctx.metric[j], opt.precision_bits);
        signs.push_back(s);
        positive = positive && s > 0;
    }
    r.witness = {{"metric_signs", signs},
                 {"normalization_exact", true},
                 {"pair_top_omega4", json_rat(*F.is_rational(pair_top(F, w4)))}};
    claims_detail::set_status(r, exact_ok && positive, /*used_intervals=*/true);
    return r;
}

inline ClaimReport claim_c09(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C09", "mixed-square invariant evaluates to -D", "the T invariant"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Form a1sq = wedge(ring, ctx.a1, ctx.a1);
    const SplitElem t_wedge =
        Rat(rat(1, 2)) * form_coeff(ring, a1sq, Mono{0xA5});

    // the displayed trilinear expression, coefficients read off a1
    auto aval = [&](int i, int j, Mono mask) {  // a_{i j} from coeff = a (x_i - x_j)
        return F.mul(form_coeff(ring, ctx.a1, mask), F.inv(F.x(i) - F.x(j)));
    };
    const SplitElem a13 = aval(0, 2, 0x05), a24b = aval(1, 3, 0xA0);
    const SplitElem a12b = aval(0, 1, 0x21), a34b = aval(2, 3, 0x84);
    const SplitElem a14b = aval(0, 3, 0x81), a32b = aval(2, 1, 0x24);
    SplitElem t_display = F.mul(F.mul(a13, a24b), F.mul(F.x(0) - F.x(2), F.x(1) - F.x(3)));
    t_display -= F.mul(F.mul(a12b, a34b), F.mul(F.x(0) - F.x(1), F.x(2) - F.x(3)));
    t_display += F.mul(F.mul(a14b, a32b), F.mul(F.x(0) - F.x(3), F.x(2) - F.x(1)));

    const bool ok = t_wedge == -F.k().D && t_display == t_wedge;
    SplitElem residual = t_wedge + F.k().D;
    r.witness = {{"t_plus_d", json_elem(residual)}, {"display_agrees", t_display == t_wedge}};
    claims_detail::set_status(r, ok);
    return r;
}

namespace claims_detail {

inline Form ch_difference(const Context& ctx, const Rat& c) {
    const Rat mult = c * c * ctx.F.k().delta;
    const Form a2c = ctx.a2_for(c);
    SplitRing ring = ctx.ring();
    return ch_combination(ctx.F, {{mult, ctx.a1},
                                  {mult, form_neg(ring, ctx.a1)},
                                  {Rat(-1), a2c},
                                  {Rat(-1), form_neg(ring, a2c)}});
}

}  // namespace claims_detail

inline ClaimReport claim_c10(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C10", "character difference reduces to the mixed family",
                  "virtual bundle character"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat c(1);
    const Form ch = claims_detail::ch_difference(ctx, c);
    bool ok = degree_part(ch, 2).is_zero() && degree_part(ch, 6).is_zero();
    const Form deg0 = degree_part(ch, 0), deg8 = degree_part(ch, 8);
    ok = ok && (deg0.is_zero() || F.is_rational(form_coeff(ring, deg0, 0)).has_value());
    ok = ok && is_rational_form(F, ctx.cube, deg8);
    // degree-4 part is supported on the two no-pair mixed monomials and
    // equals the mixed family of A1^2 scaled by 2 c^2 delta ... times 2
    const Form a1sq = wedge(ring, ctx.a1, ctx.a1);
    Form mixed;
    for (Mono m : {Mono{0xA5}, Mono{0x5A}}) {
        auto it = a1sq.t.find(m);
        if (it != a1sq.t.end()) mixed.t.emplace(m, it->second);
    }
    const Form deg4 = degree_part(ch, 4);
    ok = ok && deg4 == form_scale_rat(ring, mixed, 2 * c * c * F.k().delta);
    r.witness = {{"support", {"0xA5", "0x5A"}},
                 {"degree0", json_rat(*F.is_rational(form_coeff(ring, deg0, 0)))}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c11(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C11", "character difference equals the exotic class",
                  "key identity for the difference bundle"};
    SplitRing ring = ctx.ring();
    bool ok = true;
    Json per_c = Json::array();
    for (long cl : {1L, 2L}) {
        const Rat c(cl);
        const Form deg4 = degree_part(claims_detail::ch_difference(ctx, c), 4);
        const Form expect =
            form_scale_rat(ring, ctx.big_m, 4 * c * c * ctx.F.k().delta);
        const bool match = deg4 == expect;
        ok = ok && match;
        per_c.push_back({{"c", cl}, {"matches_4c2deltaM", match}});
    }
    r.witness = {{"cases", per_c}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c12(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C12", "squared class times the polarization is pure (3,3)",
                  "first coincidence"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Form m1 = wedge(ring, wedge(ring, ctx.a1, ctx.a1), ctx.omega);
    bool ok = is_pure_pq(m1, 3, 3) && is_rational_form(F, ctx.cube, m1);
    // computed coefficients: on the monomial missing the pair j the value is
    // (-1)^j 2 i D / mu_j; the published display carries delta in place of D.
    bool structure = true;
    Json diag = Json::array();
    for (int j = 0; j < 4; ++j) {
        const Mono m = static_cast<Mono>(0xFF ^ ((1u << j) | (1u << (j + 4))));
        const SplitElem expect =
            Rat(j % 2 ? 2 : -2) *
            F.mul(F.mul(FieldContext::unit_i(), F.k().D), F.inv(F.k().mu[j]));
        structure = structure && form_coeff(ring, m1, m) == expect;
    }
    // literal published value (delta for D): exact comparison, reported
    const SplitElem lead = form_coeff(ring, m1, Mono{0x77});
    const SplitElem literal =
        Rat(Rat(2) * F.k().delta) * F.mul(FieldContext::unit_i(), F.inv(F.k().mu[3]));
    const bool literal_matches = lead == literal;
    const SplitElem ratio = F.mul(lead, F.inv(literal));  // equals D / delta = 1/D
    ok = ok && structure;
    r.witness = {{"pure_33", is_pure_pq(m1, 3, 3)},
                 {"rational", is_rational_form(F, ctx.cube, m1)},
                 {"coefficient_structure_2iD_over_mu", structure},
                 {"displayed_literal_matches", literal_matches},
                 {"erratum", "published coefficient carries delta where the exact value has D"},
                 {"lead_times_mu4", json_elem(F.mul(lead, F.k().mu[3]))}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c13(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C13", "both degree-2 classes annihilate the polarization cube",
                  "second coincidence"};
    SplitRing ring = ctx.ring();
    const Form w3 = wedge(ring, wedge(ring, ctx.omega, ctx.omega), ctx.omega);
    const bool ok1 = wedge(ring, ctx.a1, w3).is_zero();
    const bool ok2 = wedge(ring, ctx.a2, w3).is_zero();
    r.witness = {{"a1_w3_zero", ok1}, {"a2_w3_zero", ok2}};
    claims_detail::set_status(r, ok1 && ok2);
    return r;
}

inline ClaimReport claim_c14(const Context& ctx, const RunOptions& opt) {
    ClaimReport r{"C14", "twisted character and the stability margin",
                  "difference bundle with polarization twist"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat d = F.k().delta;
    bool ok = true;
    Json cases = Json::array();
    for (long cl : {1L, 2L}) {
        const Rat c(cl);
        const Rat m = c * c * d;
        const long k = 1;
        const Form kw = form_scale_rat(ring, ctx.omega, Rat(k));
        const Form a2c = ctx.a2_for(c);
        Form ch = ch_combination(
            F, {{m, form_add(ring, ctx.a1, kw)},
                {m, form_add(ring, form_neg(ring, ctx.a1), kw)},
                {Rat(-1), a2c},
                {Rat(-1), form_neg(ring, a2c)}});
        // stated value modulo 0-, (3,3)- and 8-forms
        Form stated = form_scale_rat(ring, ctx.omega, 2 * m * k);
        stated = form_add(ring, stated, form_scale_rat(ring, ctx.big_m, 4 * m));
        stated = form_add(
            ring, stated,
            form_scale_rat(ring, wedge(ring, ctx.omega, ctx.omega), Rat(k) * Rat(k) * m));
        Form rem = form_sub(ring, ch, stated);
        bool mod_ok = degree_part(rem, 2).is_zero() && degree_part(rem, 4).is_zero();
        const Form rem6 = degree_part(rem, 6);
        mod_ok = mod_ok && is_pure_pq(rem6, 3, 3) && is_rational_form(F, ctx.cube, rem6);
        mod_ok = mod_ok && is_rational_form(F, ctx.cube, degree_part(rem, 8));

        // Chern classes and the stability margin
        const Rat rank = 2 * m - 2;
        auto [c1, c2] = chern_parts(F, ch, rank);
        const Form w2 = wedge(ring, ctx.omega, ctx.omega);
        const Rat c2w2 = *F.is_rational(pair_top(F, wedge(ring, c2, w2)));
        const Rat c1sq_w2 = *F.is_rational(pair_top(F, wedge(ring, wedge(ring, c1, c1), w2)));
        const Rat w4 = *F.is_rational(pair_top(F, wedge(ring, w2, w2)));
        const Rat general = c2w2 - (rank - 1) / (2 * rank) * c1sq_w2;
        const Rat expected_margin = m / (m - 1) * Rat(k) * Rat(k) * w4;
        const bool margin_ok = general == expected_margin && general > 0;
        const Rat displayed_coeff = (2 * d - 3) / (4 * (d - 1));
        const bool displayed_matches = displayed_coeff == (rank - 1) / (2 * rank);
        const bool c1_ok = c1 == form_scale_rat(ring, ctx.omega, 2 * m * k);
        ok = ok && mod_ok && margin_ok && c1_ok && (cl != 1 || displayed_matches);
        cases.push_back({{"c", cl},
                         {"rank", json_rat(rank)},
                         {"modulo_parts_ok", mod_ok},
                         {"c1_is_2c2delta_k_omega", c1_ok},
                         {"c2_w2", json_rat(c2w2)},
                         {"c1sq_w2", json_rat(c1sq_w2)},
                         {"margin", json_rat(general)},
                         {"margin_positive", general > 0},
                         {"margin_matches_closed_form", margin_ok},
                         {"displayed_coefficient_matches", displayed_matches}});
    }
    r.witness = {{"k", 1}, {"cases", cases}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c15(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C15", "the conjugate-linear star squares to the identity",
                  "duality on (0,2) forms"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    bool ok = true;
    for (int j = 0; j < 4; ++j)
        for (int l = j + 1; l < 4; ++l) {
            Form f;
            form_set(ring, f, static_cast<Mono>((1u << (j + 4)) | (1u << (l + 4))),
                     FieldContext::one());
            const Form sf = star_02(ctx, f);
            ok = ok && star_02(ctx, sf) == f;
            // f ^ *f is a positive multiple of thetabar
            const Form prod = wedge(ring, f, sf);
            const SplitElem coeff = form_coeff(ring, prod, Mono{0xF0});
            const SplitElem ratio =
                F.mul(coeff, F.inv(form_coeff(ring, ctx.theta_bar, Mono{0xF0})));
            ok = ok && F.is_real(ratio) && F.sign_at_identity(ratio) > 0;
            // conjugate linearity
            const Form iscaled = form_scale(ring, f, FieldContext::unit_i());
            ok = ok && star_02(ctx, iscaled) ==
                           form_scale(ring, sf, -FieldContext::unit_i());
        }
    r.witness = {{"basis_monomials_checked", 6}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c16(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C16", "isogeny eigenvalue table over all degree-4 monomials",
                  "eigenvalue table"};
    const FieldContext& F = ctx.F;
    const FieldConstants& k = F.k();
    const Rat d = k.delta;
    const SplitElem plus = FieldContext::one() + k.iD, minus = FieldContext::one() - k.iD;
    const SplitElem pa_balanced = FieldContext::from_rat((1 + d) * (1 + d));
    const SplitElem pb_plus = FieldContext::from_rat(d * d);
    const SplitElem pb_minus = FieldContext::from_rat(-(d * d));

    // A generator carries weight +1 when its multiplier is 1 + iD and -1
    // when it is 1 - iD; pairs contribute 1 + delta. The weight sum decides
    // the row of the table.
    auto weight = [](int bit) {
        const int j = (bit & 3) + 1;
        const bool top = bit < 4;
        return (j % 2 == 1) == top ? 1 : -1;
    };

    std::map<std::string, int> counts;
    bool ok = true;
    for (Mono m : claims_detail::monos_of_degree(4)) {
        const SplitElem va = ctx.monomial_multiplier(k.cm_a, m);
        const SplitElem vb = ctx.monomial_multiplier(k.cm_b, m);
        int pairs = 0, wsum = 0;
        for (int j = 0; j < 4; ++j) {
            const bool t = m & (1u << j), b = m & (1u << (j + 4));
            if (t && b) {
                ++pairs;
                continue;
            }
            if (t) wsum += weight(j);
            if (b) wsum += weight(j + 4);
        }
        SplitElem ea, eb;
        switch (wsum) {
            case 0:
                ea = pa_balanced;
                eb = pb_plus;
                break;
            case 2:
            case -2: {
                const SplitElem& sq = wsum > 0 ? plus : minus;
                ea = F.mul(FieldContext::from_rat(1 + d), F.mul(sq, sq));
                eb = pb_minus;
                break;
            }
            case 4:
                ea = F.pow(plus, 4);
                eb = pb_plus;
                break;
            case -4:
                ea = F.pow(minus, 4);
                eb = pb_plus;
                break;
            default:
                ok = false;
        }
        ok = ok && va == ea && vb == eb;
        const int p = mono_p(m), q = mono_q(m);
        std::string row;
        if (p == 4 || q == 4)
            row = "pure volume type";
        else if (p != q)
            row = pairs == 1 ? (wsum == 0 ? "(3,1) paired balanced" : "(3,1) paired unbalanced")
                             : "(3,1) free";
        else if (pairs == 2)
            row = "(2,2) two pairs";
        else if (pairs == 1)
            row = wsum == 0 ? "(2,2) one pair balanced" : "(2,2) one pair unbalanced";
        else
            row = wsum == 0 ? "(2,2) free balanced" : "(2,2) exotic";
        counts[row] += 1;
    }

    // the nine listed representatives, with the stated eigenvalues
    struct Row {
        Mono mono;
        SplitElem ea, eb;
    };
    const std::vector<Row> listed = {
        {Mono{0x0F}, pa_balanced, pb_plus},
        {Mono{0x17}, pa_balanced, pb_plus},
        {Mono{0x1B}, F.mul(FieldContext::from_rat(1 + d), F.mul(minus, minus)), pb_minus},
        {Mono{0x1E}, F.mul(FieldContext::from_rat(1 + d), F.mul(minus, minus)), pb_minus},
        {Mono{0x33}, pa_balanced, pb_plus},
        {Mono{0x53}, F.mul(FieldContext::from_rat(1 + d), F.mul(minus, minus)), pb_minus},
        {Mono{0xC3}, pa_balanced, pb_plus},
        {Mono{0xA5}, F.pow(plus, 4), pb_plus},
        {Mono{0x5A}, F.pow(minus, 4), pb_plus},
    };
    bool reps_ok = true;
    for (const Row& row : listed)
        reps_ok = reps_ok && ctx.monomial_multiplier(k.cm_a, row.mono) == row.ea &&
                  ctx.monomial_multiplier(k.cm_b, row.mono) == row.eb;
    ok = ok && reps_ok;

    Json tally = Json::object();
    for (const auto& [row, n] : counts) tally[row] = n;
    // The published count for the one-pair (2,2) row covers all 24 shapes;
    // eight of them are balanced and carry the two-pair eigenvalues instead.
    r.witness = {{"counts", tally},
                 {"listed_rows_match", reps_ok},
                 {"one_pair_22_erratum",
                  {{"published_multiplicity", 24},
                   {"with_listed_eigenvalue", counts["(2,2) one pair unbalanced"]},
                   {"with_balanced_eigenvalue", counts["(2,2) one pair balanced"]}}}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c17(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C17", "projection operator onto the exotic plane",
                  "composite isogeny operator"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat d = F.k().delta;
    const SplitElem abar = F.conj(F.k().cm_a);
    bool ok = true;

    const Form phi_m = claims_detail::apply_phi(ctx, F.k().cm_a, ctx.big_m);
    const Form phi_mp = claims_detail::apply_phi(ctx, F.k().cm_a, ctx.big_m_prime);
    // Phi_a M = -8 d^2 [ 2 d M - (1-d) d M' ], Phi_a M' = -8 d^2 [ 2 d M' + (1-d) M ]
    const Form exp_m =
        form_add(ring, form_scale_rat(ring, ctx.big_m, -16 * d * d * d),
                 form_scale_rat(ring, ctx.big_m_prime, 8 * d * d * d * (1 - d)));
    const Form exp_mp =
        form_add(ring, form_scale_rat(ring, ctx.big_m_prime, -16 * d * d * d),
                 form_scale_rat(ring, ctx.big_m, -8 * d * d * (1 - d)));
    ok = ok && phi_m == exp_m && phi_mp == exp_mp;

    const Form phib_m = claims_detail::apply_phi(ctx, abar, ctx.big_m);
    const Form phib_mp = claims_detail::apply_phi(ctx, abar, ctx.big_m_prime);
    const Form exp_bm =
        form_add(ring, form_scale_rat(ring, ctx.big_m, -16 * d * d * d),
                 form_scale_rat(ring, ctx.big_m_prime, -8 * d * d * d * (1 - d)));
    const Form exp_bmp =
        form_add(ring, form_scale_rat(ring, ctx.big_m_prime, -16 * d * d * d),
                 form_scale_rat(ring, ctx.big_m, 8 * d * d * (1 - d)));
    ok = ok && phib_m == exp_bm && phib_mp == exp_bmp;

    // annihilation outside the plane, through the eigenvalues
    int annihilated = 0;
    for (Mono m : claims_detail::monos_of_degree(4)) {
        if (m == Mono{0xA5} || m == Mono{0x5A}) continue;
        const SplitElem va = ctx.monomial_multiplier(F.k().cm_a, m);
        const SplitElem vb = ctx.monomial_multiplier(F.k().cm_b, m);
        const SplitElem factor =
            F.mul(va - FieldContext::from_rat((1 + d) * (1 + d)),
                  vb + FieldContext::from_rat(d * d));
        if (factor.is_zero()) ++annihilated;
    }
    ok = ok && annihilated == 68;

    // consistency: applying the operator twice equals the matrix square
    const Form phi2_m = claims_detail::apply_phi(ctx, F.k().cm_a, phi_m);
    const Rat s = -8 * d * d;
    // matrix of Phi_a on (M, M') columns: [[2d s, (1-d) s], [-(1-d) d s, 2 d s]]
    const Rat m11 = 2 * d * s, m21 = -(1 - d) * d * s, m12 = (1 - d) * s, m22 = 2 * d * s;
    const Form expect2 =
        form_add(ring, form_scale_rat(ring, ctx.big_m, m11 * m11 + m12 * m21),
                 form_scale_rat(ring, ctx.big_m_prime, m21 * m11 + m22 * m21));
    ok = ok && phi2_m == expect2;

    r.witness = {{"annihilated_monomials", annihilated},
                 {"matrix_scale", json_rat(s)},
                 {"square_consistent", phi2_m == expect2}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c18(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C18", "real locus is special Lagrangian: hypothesis checks",
                  "antiholomorphic involution data"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const LinMap s1 = ctx.sigma1_map();
    bool ok = true;
    // involution
    const LinMap s2 = linmap_compose(ring, s1, s1);
    for (int j = 0; j < 4; ++j) {
        Form expect;
        form_set(ring, expect, static_cast<Mono>(1u << j), FieldContext::one());
        ok = ok && s2.z_img[j] == expect;
    }
    ok = ok && pullback(ring, s1, ctx.theta) == ctx.theta_bar;
    ok = ok && restrict_to_Y(F, ctx.omega).is_zero();
    // Im theta restricts to zero
    const RealForm rt = restrict_to_Y(F, ctx.theta);
    const RealForm rtb = restrict_to_Y(F, ctx.theta_bar);
    ok = ok && rt == rtb;
    r.witness = {{"involution", true},
                 {"pullback_theta_is_conjugate", true},
                 {"omega_restricts_to_zero", true},
                 {"im_theta_restricts_to_zero", rt == rtb}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c19(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C19", "cycle pairings as exact multiples of the covolume",
                  "pairings with the real locus and its images"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const FieldConstants& k = F.k();
    const Rat d = k.delta;
    bool ok = true;

    const SplitElem ym = claims_detail::pair_with_y(ctx, ctx.big_m);
    const SplitElem ymp = claims_detail::pair_with_y(ctx, ctx.big_m_prime);
    ok = ok && ym == Rat(2) * k.D && ymp.is_zero();

    // <C_a, F> = <Y, (pi_b^* + d^2)(pi_a^* - (1+d)^2) F>
    auto pair_with_cycle = [&](const SplitElem& a, const Form& f) {
        return claims_detail::pair_with_y(ctx, claims_detail::apply_phi(ctx, a, f));
    };
    const SplitElem cam = pair_with_cycle(k.cm_a, ctx.big_m);
    const SplitElem camp = pair_with_cycle(k.cm_a, ctx.big_m_prime);
    const SplitElem cbm = pair_with_cycle(F.conj(k.cm_a), ctx.big_m);
    const SplitElem cbmp = pair_with_cycle(F.conj(k.cm_a), ctx.big_m_prime);
    const Rat c32 = -32 * d * d * d;
    const Rat c16 = -16 * d * d * (1 - d);
    ok = ok && cam == Rat(c32) * k.D && camp == Rat(c16) * k.D;
    ok = ok && cbm == Rat(c32) * k.D && cbmp == Rat(-c16) * k.D;

    // cross-check: operator through eigenvalues on the plane agrees with the
    // pullback route
    const SplitElem lam_p = ctx.monomial_multiplier(k.cm_a, Mono{0xA5});
    const SplitElem lam_bp = ctx.monomial_multiplier(k.cm_b, Mono{0xA5});
    const SplitElem factor_p =
        F.mul(lam_p - FieldContext::from_rat((1 + d) * (1 + d)),
              lam_bp + FieldContext::from_rat(d * d));
    Form eigen_route;
    form_set(ring, eigen_route, Mono{0xA5},
             F.mul(form_coeff(ring, ctx.big_m, Mono{0xA5}), factor_p));
    form_set(ring, eigen_route, Mono{0x5A},
             F.mul(form_coeff(ring, ctx.big_m, Mono{0x5A}), F.conj(factor_p)));
    const bool route_match =
        claims_detail::pair_with_y(ctx, eigen_route) == cam;
    ok = ok && route_match;

    r.witness = {{"y_m_over_delta_cov", json_elem(ym)},
                 {"y_mprime_zero", ymp.is_zero()},
                 {"ca_m", json_rat(c32)},
                 {"ca_mprime", json_rat(c16)},
                 {"cabar_mprime", json_rat(-c16)},
                 {"eigenvalue_route_agrees", route_match},
                 {"note", "values are the stated rational multiples of D times the covolume"}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c20(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C20", "isogeny action on the polarization and the volume form",
                  "pullbacks of omega and theta"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const Rat d = F.k().delta;
    const LinMap pa = ctx.isogeny_map(F.k().cm_a), pb = ctx.isogeny_map(F.k().cm_b);
    const bool ok =
        pullback(ring, pa, ctx.omega) == form_scale_rat(ring, ctx.omega, 1 + d) &&
        pullback(ring, pa, ctx.theta) ==
            form_scale_rat(ring, ctx.theta, (1 + d) * (1 + d)) &&
        pullback(ring, pb, ctx.omega) == form_scale_rat(ring, ctx.omega, d) &&
        pullback(ring, pb, ctx.theta) == form_scale_rat(ring, ctx.theta, d * d);
    r.witness = {{"omega_a", json_rat(1 + d)},
                 {"theta_a", json_rat((1 + d) * (1 + d))},
                 {"omega_b", json_rat(d)},
                 {"theta_b", json_rat(d * d)}};
    claims_detail::set_status(r, ok);
    return r;
}

namespace claims_detail {

// Numeric fallback for the type-(1,1) sufficiency: exact points on the
// condition variety, residuals enclosed at high precision.
inline bool numeric_sufficiency(const Context& ctx, const std::vector<ParamPoly>& polys,
                                const RunOptions& opt, Json* out) {
    const FieldContext& F = ctx.F;
    const auto [cond1, cond2] = condition_polys(F);
    std::mt19937_64 rng(opt.seed + 17);
    const Rat tol = pow2(-128);
    int done = 0;
    while (done < opt.samples) {
        std::array<std::array<SplitElem, 2>, 2> alpha;
        alpha[0][0] = FieldContext::from_rat(random_rat(rng));
        alpha[0][1] = FieldContext::from_rat(random_rat(rng));
        alpha[1][0] = FieldContext::from_rat(random_rat(rng));
        // solve the first condition for the remaining entry
        std::array<SplitElem, 16> partial{};
        partial[kA12] = alpha[0][0];
        partial[kA14] = alpha[0][1];
        partial[kA32] = alpha[1][0];
        // cond1 = lin * a34 + rest
        ParamPoly lin, rest;
        for (const auto& [key, v] : cond1.t) {
            if (key_exp(key, kA34) == 1)
                lin.t.emplace(key - key_var(kA34), v);
            else
                rest.t.emplace(key, v);
        }
        const SplitElem lin_v = pp_specialize(F, lin, specialization(F, {partial[0], partial[1],
                                                                         partial[2], SplitElem{},
                                                                         SplitElem{}, SplitElem{},
                                                                         SplitElem{}, SplitElem{}}));
        if (lin_v.is_zero()) continue;
        const SplitElem rest_v =
            pp_specialize(F, rest, specialization(F, {partial[0], partial[1], partial[2],
                                                      SplitElem{}, SplitElem{}, SplitElem{},
                                                      SplitElem{}, SplitElem{}}));
        alpha[1][1] = -F.mul(rest_v, F.inv(lin_v));
        const auto vals = alpha_specialization(F, alpha);
        for (const ParamPoly& p : polys) {
            const SplitElem res = pp_specialize(F, p, vals);
            const ComplexBox box = F.eval_box(res, 256);
            if (!(abs(box.re.lo) < tol && abs(box.re.hi) < tol && abs(box.im.lo) < tol &&
                  abs(box.im.hi) < tol))
                return false;
        }
        ++done;
    }
    if (out) (*out)["numeric_samples"] = done;
    return true;
}

}  // namespace claims_detail

inline ClaimReport claim_c21(const Context& ctx, const RunOptions& opt) {
    ClaimReport r{"C21", "sufficiency of the two coordinate-change conditions",
                  "type (1,1) after the coordinate change"};
    const FieldContext& F = ctx.F;
    const auto [cond1, cond2] = condition_polys(F);
    const ParamPoly c1c = pp_conj(F, cond1), c2c = pp_conj(F, cond2);
    bool exact_ok = true;
    std::vector<ParamPoly> leftovers;
    Json detail = Json::array();
    for (const Form* f : {&ctx.a1, &ctx.a2}) {
        const TypeParts parts = symbolic_type_parts(F, *f);
        int nonzero = 0;
        for (const ParamPoly& p : parts.part20) {
            const ParamPoly rem = reduce_by_conditions(F, p, {cond1, cond2});
            if (!rem.is_zero()) {
                ++nonzero;
                leftovers.push_back(rem);
            }
        }
        for (const ParamPoly& p : parts.part02) {
            const ParamPoly rem = reduce_by_conditions(F, p, {c1c, c2c});
            if (!rem.is_zero()) {
                ++nonzero;
                leftovers.push_back(rem);
            }
        }
        exact_ok = exact_ok && nonzero == 0;
        detail.push_back({{"coeffs_20", parts.part20.size()},
                          {"coeffs_02", parts.part02.size()},
                          {"nonzero_remainders", nonzero}});
    }
    r.witness = {{"forms", detail}, {"ideal_membership_exact", exact_ok}};
    if (exact_ok) {
        r.status = ClaimStatus::kVerifiedExact;
        return r;
    }
    const bool numeric =
        claims_detail::numeric_sufficiency(ctx, leftovers, opt, &r.witness);
    r.status = numeric ? ClaimStatus::kVerifiedNumeric : ClaimStatus::kFailed;
    return r;
}

inline ClaimReport claim_c22(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C22", "the derived second matrix satisfies its condition",
                  "companion matrix from the hat"};
    const FieldContext& F = ctx.F;
    const auto [cond1, cond2] = condition_polys(F);
    const AlphaMatrix tfa = tilde_from_alpha(F, alpha_vars());
    ParamPoly cond2_sub = cond2;
    const int tvars[4] = {kT21, kT23, kT41, kT43};
    for (int i = 0; i < 4; ++i) {
        cond2_sub = pp_substitute(F, cond2_sub, tvars[i], tfa[i / 2][i % 2]);
        cond2_sub =
            pp_substitute(F, cond2_sub, tvars[i] + kConjOffset, pp_conj(F, tfa[i / 2][i % 2]));
    }
    const bool cond2_ok =
        reduce_by_conditions(F, cond2_sub, {pp_conj(F, cond1)}).is_zero();

    const AlphaMatrix prod = mat_mul(F, mat_conj(F, alpha_vars()), tfa);
    const SplitElem ratio = F.div(F.x(0) - F.x(2), F.x(1) - F.x(3));
    const ParamPoly scalar = pp_scale(F, mat_det(F, mat_conj(F, alpha_vars())), ratio);
    const bool scalar_ok = prod[0][0] == scalar && prod[1][1] == scalar &&
                           prod[0][1].is_zero() && prod[1][0].is_zero();
    // zero maps to zero
    AlphaMatrix zero;
    const AlphaMatrix tz = tilde_from_alpha(F, zero);
    const bool zero_ok = tz[0][0].is_zero() && tz[0][1].is_zero() && tz[1][0].is_zero() &&
                         tz[1][1].is_zero();
    r.witness = {{"cond2_reduces", cond2_ok},
                 {"scalar_matrix_identity", scalar_ok},
                 {"zero_to_zero", zero_ok}};
    claims_detail::set_status(r, cond2_ok && scalar_ok && zero_ok);
    return r;
}

inline ClaimReport claim_c23(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C23", "inverse-transform scalars and the excluded determinant",
                  "scalars of the inverse coordinate change"};
    const FieldContext& F = ctx.F;
    const auto astar = alpha_star(F);
    const InverseTransform it = inverse_transform(ctx, astar);
    const SplitElem ratio = F.div(F.x(0) - F.x(2), F.x(1) - F.x(3));
    const SplitElem det =
        F.mul(astar[0][0], astar[1][1]) - F.mul(astar[0][1], astar[1][0]);
    const SplitElem s = F.mul(ratio, F.conj(det));
    bool ok = F.mul(it.c, FieldContext::one() - s) == FieldContext::one();
    ok = ok && it.c_tilde == F.conj(it.c);
    // (c-1)/c equals the scalar value of conj(alpha) alphatilde
    ok = ok && F.mul(s, it.c) == it.c - FieldContext::one();
    // exclusion: det alpha* != (x2-x4)/(x1-x3)
    const SplitElem excluded = F.div(F.x(1) - F.x(3), F.x(0) - F.x(2));
    ok = ok && !(det == excluded);
    // beta = -ctilde alpha
    bool beta_ok = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            beta_ok = beta_ok && it.beta[i][j] == -F.mul(it.c_tilde, astar[i][j]);
    ok = ok && beta_ok;
    r.witness = {{"c_defining_identity", true},
                 {"det_not_excluded", !(det == excluded)},
                 {"beta_relation", beta_ok}};
    claims_detail::set_status(r, ok);
    return r;
}

inline ClaimReport claim_c24(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C24", "polarization stays (1,1); the ellipsoid of solutions",
                  "type preservation and the solution locus"};
    const FieldContext& F = ctx.F;
    const FieldConstants& k = F.k();
    const SplitElem r1 = F.div(F.x(0) - F.x(3), F.x(1) - F.x(2));
    const SplitElem r2 = F.div(F.x(2) - F.x(3), F.x(0) - F.x(1));
    const AlphaMatrix tfa = tilde_from_alpha(F, alpha_vars());
    auto subst_all = [&](ParamPoly p) {
        const int tvars[4] = {kT21, kT23, kT41, kT43};
        for (int i = 0; i < 4; ++i) {
            p = pp_substitute(F, p, tvars[i], tfa[i / 2][i % 2]);
            p = pp_substitute(F, p, tvars[i] + kConjOffset, pp_conj(F, tfa[i / 2][i % 2]));
        }
        p = pp_substitute(F, p, kA34, pp_scale(F, pp_var(kA12 + kConjOffset), r1));
        p = pp_substitute(F, p, kA34 + kConjOffset, pp_scale(F, pp_var(kA12), F.conj(r1)));
        p = pp_substitute(F, p, kA14, pp_scale(F, pp_var(kA32 + kConjOffset), -r2));
        p = pp_substitute(F, p, kA14 + kConjOffset,
                          pp_scale(F, pp_var(kA32), -F.conj(r2)));
        return p;
    };
    bool omega_ok = true;
    const TypeParts wparts = symbolic_type_parts(F, ctx.omega);
    for (const ParamPoly& p : wparts.part20) omega_ok = omega_ok && subst_all(p).is_zero();
    for (const ParamPoly& p : wparts.part02) omega_ok = omega_ok && subst_all(p).is_zero();

    // substitute the relations into the first condition: the displayed
    // constrained equation
    auto [cond1, cond2] = condition_polys(F);
    ParamPoly c1sub = cond1;
    c1sub = pp_substitute(F, c1sub, kA34, pp_scale(F, pp_var(kA12 + kConjOffset), r1));
    c1sub = pp_substitute(F, c1sub, kA14, pp_scale(F, pp_var(kA32 + kConjOffset), -r2));
    ParamPoly disp = pp_scale(
        F, pp_mul(F, pp_var(kA12), pp_var(kA12 + kConjOffset)),
        F.mul(F.mul(k.h3, F.x(0) - F.x(2)), r1));
    disp = pp_add(disp, pp_scale(F, pp_mul(F, pp_var(kA32), pp_var(kA32 + kConjOffset)),
                                 F.mul(F.mul(k.h3, F.x(0) - F.x(2)), r2)));
    disp = pp_add(disp, pp_const(F.mul(k.h3, F.x(1) - F.x(3))));
    disp = pp_add(disp, pp_scale(F, pp_add(pp_var(kA12), pp_var(kA12 + kConjOffset)),
                                 F.mul(k.h4, F.x(0) - F.x(3))));
    disp = pp_add(disp, pp_scale(F, pp_add(pp_var(kA32), pp_var(kA32 + kConjOffset)),
                                 F.mul(k.h2, F.x(2) - F.x(3))));
    const bool ellipsoid_ok = c1sub == pp_neg(disp);

    // the excluded-determinant locus in the constrained coordinates
    ParamPoly det = mat_det(F, alpha_vars());
    det = pp_substitute(F, det, kA34, pp_scale(F, pp_var(kA12 + kConjOffset), r1));
    det = pp_substitute(F, det, kA14, pp_scale(F, pp_var(kA32 + kConjOffset), -r2));
    const ParamPoly det_disp =
        pp_add(pp_scale(F, pp_mul(F, pp_var(kA12), pp_var(kA12 + kConjOffset)), r1),
               pp_scale(F, pp_mul(F, pp_var(kA32), pp_var(kA32 + kConjOffset)), r2));
    const bool det_ok = det == det_disp;

    r.witness = {{"omega_type_11", omega_ok},
                 {"constrained_equation_matches", ellipsoid_ok},
                 {"determinant_becomes_norm", det_ok}};
    claims_detail::set_status(r, omega_ok && ellipsoid_ok && det_ok);
    return r;
}

inline ClaimReport claim_c25(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C25", "the distinguished solution satisfies every constraint",
                  "exact solution of the conditions"};
    const FieldContext& F = ctx.F;
    const auto [cond1, cond2] = condition_polys(F);
    const auto astar = alpha_star(F);
    const auto vals = alpha_specialization(F, astar);
    bool ok = pp_specialize(F, cond1, vals).is_zero();
    ok = ok && pp_specialize(F, cond2, vals).is_zero();
    const SplitElem r1 = F.div(F.x(0) - F.x(3), F.x(1) - F.x(2));
    const SplitElem r2 = F.div(F.x(2) - F.x(3), F.x(0) - F.x(1));
    ok = ok && astar[1][1] == F.mul(r1, F.conj(astar[0][0]));
    ok = ok && astar[0][1] == -F.mul(r2, F.conj(astar[1][0]));
    const auto [ell, hyp] = ellipsoid_residual(F, astar[0][0], astar[1][0]);
    ok = ok && ell.is_zero() && !hyp.is_zero();
    r.witness = {{"cond1_zero", true},
                 {"cond2_zero", true},
                 {"omega_relations", true},
                 {"on_ellipsoid", ell.is_zero()},
                 {"off_hyperplane", !hyp.is_zero()}};
    claims_detail::set_status(r, ok);
    return r;
}

namespace claims_detail {

struct DisplayForms {
    Form a1, a2, omega;  // the published right-hand sides, on sorted monomials
};

inline DisplayForms display_forms(const Context& ctx) {
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    auto d = [&](int i, int j) { return F.x(i) - F.x(j); };
    auto pw = [&](const SplitElem& b, int e) { return F.pow(b, e); };
    auto mono2 = [](int a, int b) { return static_cast<Mono>((1u << a) | (1u << b)); };
    const SplitElem p1 = F.mul(F.mul(pw(d(0, 1), 2), pw(d(1, 2), 2)),
                               F.mul(pw(d(0, 3), 2), d(2, 3)));
    const SplitElem p2 = F.mul(F.mul(pw(d(0, 1), 2), pw(d(1, 2), 2)),
                               F.mul(d(0, 3), pw(d(2, 3), 2)));
    const SplitElem p3 = F.mul(F.mul(d(0, 1), pw(d(1, 2), 2)),
                               F.mul(pw(d(0, 3), 2), pw(d(2, 3), 2)));
    const SplitElem p4 = F.mul(F.mul(pw(d(0, 1), 2), d(1, 2)),
                               F.mul(pw(d(0, 3), 2), pw(d(2, 3), 2)));
    DisplayForms out;
    form_set(ring, out.a1, mono2(0, 5), p1);
    form_set(ring, out.a1, mono2(1, 6), -p2);
    form_set(ring, out.a1, mono2(2, 7), p3);
    form_set(ring, out.a1, mono2(3, 4), p4);
    form_accum(ring, out.a1, mono2(1, 4), -p1);
    form_accum(ring, out.a1, mono2(2, 5), p2);
    form_accum(ring, out.a1, mono2(3, 6), -p3);
    form_accum(ring, out.a1, mono2(0, 7), -p4);

    form_set(ring, out.a2, mono2(0, 5), p1);
    form_set(ring, out.a2, mono2(1, 6), p2);
    form_set(ring, out.a2, mono2(2, 7), p3);
    form_set(ring, out.a2, mono2(3, 4), -p4);
    form_accum(ring, out.a2, mono2(1, 4), p1);
    form_accum(ring, out.a2, mono2(2, 5), p2);
    form_accum(ring, out.a2, mono2(3, 6), p3);
    form_accum(ring, out.a2, mono2(0, 7), -p4);

    const SplitElem d1 = F.mul(F.mul(pw(d(0, 1), 2), F.mul(d(0, 2), d(1, 2))),
                               F.mul(pw(d(0, 3), 2), d(2, 3)));
    const SplitElem d2 = F.mul(F.mul(pw(d(0, 1), 2), pw(d(1, 2), 2)),
                               F.mul(F.mul(d(0, 3), d(1, 3)), d(2, 3)));
    const SplitElem d3 = F.mul(F.mul(d(0, 1), F.mul(d(0, 2), pw(d(1, 2), 2))),
                               F.mul(d(0, 3), pw(d(2, 3), 2)));
    const SplitElem d4 = F.mul(F.mul(d(0, 1), d(1, 2)),
                               F.mul(F.mul(pw(d(0, 3), 2), d(1, 3)), pw(d(2, 3), 2)));
    form_set(ring, out.omega, mono2(0, 4), -d1);
    form_set(ring, out.omega, mono2(1, 5), -d2);
    form_set(ring, out.omega, mono2(2, 6), -d3);
    form_set(ring, out.omega, mono2(3, 7), -d4);
    return out;
}

inline Form pull_to_w(const Context& ctx, const Form& f,
                      const std::array<SplitElem, 16>& vals) {
    ParamRing pring{&ctx.F};
    return specialize_form(ctx.F, pullback(pring, coordinate_change(ctx.F), lift_form(ctx.F, f)),
                           vals);
}

}  // namespace claims_detail

inline ClaimReport claim_c26(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C26", "closed forms of the three classes in the new coordinates",
                  "transformed classes at the distinguished solution"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const FieldConstants& k = F.k();
    const auto vals = alpha_specialization(F, alpha_star(F));
    const claims_detail::DisplayForms disp = claims_detail::display_forms(ctx);

    const SplitElem h3sq = F.mul(k.h3, k.h3);
    const Form a1w = claims_detail::pull_to_w(ctx, ctx.a1, vals);
    const bool a1_ok =
        form_scale(ring, a1w, Rat(rat(1, 4)) * h3sq) == disp.a1 && is_pure_pq(a1w, 1, 1);

    const Form a2w = claims_detail::pull_to_w(ctx, ctx.a2, vals);
    const SplitElem scale_a2 = F.mul(h3sq, F.inv(Rat(4) * k.iD));
    const bool a2_ok = form_scale(ring, a2w, scale_a2) == disp.a2 && is_pure_pq(a2w, 1, 1);

    const Form ww = claims_detail::pull_to_w(ctx, ctx.omega, vals);
    const SplitElem scale_w = F.mul(Rat(k.delta) * h3sq, F.inv(Rat(4) * k.iD));
    const bool w_ok = form_scale(ring, ww, scale_w) == disp.omega && is_pure_pq(ww, 1, 1);

    r.witness = {{"a1_display", a1_ok}, {"a2_display", a2_ok}, {"omega_display", w_ok}};
    claims_detail::set_status(r, a1_ok && a2_ok && w_ok);
    return r;
}

inline ClaimReport claim_c27(const Context& ctx, const RunOptions&) {
    ClaimReport r{"C27", "the negated polarization is positive in the new coordinates",
                  "positivity after the coordinate change"};
    const FieldContext& F = ctx.F;
    SplitRing ring = ctx.ring();
    const auto vals = alpha_specialization(F, alpha_star(F));
    const Form ww = claims_detail::pull_to_w(ctx, ctx.omega, vals);
    bool ok = is_pure_pq(ww, 1, 1);
    Json diag = Json::array();
    for (int j = 0; j < 4; ++j) {
        const Mono m = static_cast<Mono>((1u << j) | (1u << (j + 4)));
        // -omega_w = i sum g~_j dw_j dwb_j
        const SplitElem gj =
            F.mul(-form_coeff(ring, ww, m), F.inv(FieldContext::unit_i()));
        QInterval enc;
        const int s = F.sign_at_identity(gj, 128, &enc);
        ok = ok && s > 0 && enc.width() <= pow2(-128);
        diag.push_back({{"sign", s},
                        {"enclosure_lo", to_string(enc.lo)},
                        {"enclosure_width_below_2^-128", enc.width() <= pow2(-128)}});
    }
    r.witness = {{"diagonal", diag}};
    claims_detail::set_status(r, ok, /*used_intervals=*/true);
    return r;
}

inline ClaimReport claim_c28(const Context& ctx, const RunOptions& opt) {
    ClaimReport r{"C28", "degree and genus bookkeeping has integer solutions",
                  "curve degree, genus and the dimension count"};
    if (!is_integer(opt.omega4) || opt.omega4 <= 0)
        throw UsageError("the top intersection number must be a positive integer here");
    const Int w4(opt.omega4.get_num());
    const Rat delta = ctx.F.k().delta;
    if (!is_integer(delta)) {
        r.status = ClaimStatus::kFailed;
        r.witness = {{"reason", "delta is not integral; rescale the quartic first"}};
        return r;
    }
    const Int delta_i(delta.get_num());

    auto check_solution = [&](const Int& c, const Int& k1, Json* row) -> bool {
        // k solving the dimension count: k = c^2 delta / (k1^3 <w^4>) + 3 k1 / 2.
        // (The published display divides the 3 k1 / 2 term by <w^4> as well;
        // the two agree exactly when <w^4> = 1.)
        const Int num = 2 * c * c * delta_i + 3 * w4 * pow_int(k1, 4);
        const Int den = 2 * pow_int(k1, 3) * w4;
        if (num % den != 0) return false;
        const Int k = num / den;
        const Int d_deg = k * pow_int(k1, 3) * w4;       // degree of the twist on the curve
        const Int genus2 = 3 * pow_int(k1, 4) * w4 + 2;  // twice the genus
        // dimension count: (k k1^3 - (3/2) k1^4) <w^4> = c^2 delta, exactly
        const Rat lhs =
            (rat(k) * pow_rat(rat(k1), 3) - rat(3, 2) * pow_rat(rat(k1), 4)) * rat(w4);
        const bool rr = lhs == rat(c * c) * delta;
        // equivalently d - g + 1 = c^2 delta, kept integer-exact
        const bool dim_ok = 2 * d_deg - genus2 + 2 == 2 * c * c * delta_i;
        if (d_deg <= genus2 || !rr || !dim_ok) return false;
        if (row)
            *row = {{"c", to_string(c)},
                    {"k1", to_string(k1)},
                    {"k", to_string(k)},
                    {"degree", to_string(d_deg)},
                    {"two_genus", to_string(genus2)},
                    {"riemann_roch_exact", rr},
                    {"h0_equals_c2delta", dim_ok}};
        return true;
    };

    Json in_box = Json::array();
    for (Int k1 = 1; k1 <= opt.k1_max; ++k1)
        for (Int c = 1; c <= opt.c_max; ++c) {
            Json row;
            if (check_solution(c, k1, &row)) in_box.push_back(row);
        }
    r.witness = {{"solutions_in_box", in_box},
                 {"c_max", opt.c_max},
                 {"k1_max", opt.k1_max},
                 {"omega4", json_rat(opt.omega4)},
                 {"k_formula", "c^2 delta / (k1^3 <w^4>) + 3 k1 / 2"},
                 {"published_k_formula_equivalent", opt.omega4 == 1}};
    if (!in_box.empty()) {
        r.status = ClaimStatus::kVerifiedExact;
        return r;
    }
    // The configured box can be empty for perfectly good quartics (dyadic
    // obstructions); the statement itself is about some choice of (c, k1),
    // so scan a wider box before giving up.
    for (Int k1 = 1; k1 <= 64; ++k1)
        for (Int c = 1; c <= 4096; ++c) {
            Json row;
            if (check_solution(c, k1, &row)) {
                r.witness["solution_outside_box"] = row;
                r.status = ClaimStatus::kVerifiedExact;
                return r;
            }
        }
    r.status = ClaimStatus::kFailed;
    r.witness["reason"] = "no integral solution with k1 <= 64, c <= 4096";
    return r;
}

// --- catalogue and the runner ----------------------------------------------

using ClaimFn = ClaimReport (*)(const Context&, const RunOptions&);

struct ClaimEntry {
    const char* id;
    ClaimFn fn;
};

inline const std::vector<ClaimEntry>& claim_catalogue() {
    static const std::vector<ClaimEntry> table = {
        {"C01", claim_c01}, {"C02", claim_c02}, {"C03", claim_c03}, {"C04", claim_c04},
        {"C05", claim_c05}, {"C06", claim_c06}, {"C07", claim_c07}, {"C08", claim_c08},
        {"C09", claim_c09}, {"C10", claim_c10}, {"C11", claim_c11}, {"C12", claim_c12},
        {"C13", claim_c13}, {"C14", claim_c14}, {"C15", claim_c15}, {"C16", claim_c16},
        {"C17", claim_c17}, {"C18", claim_c18}, {"C19", claim_c19}, {"C20", claim_c20},
        {"C21", claim_c21}, {"C22", claim_c22}, {"C23", claim_c23}, {"C24", claim_c24},
        {"C25", claim_c25}, {"C26", claim_c26}, {"C27", claim_c27}, {"C28", claim_c28},
    };
    return table;
}

inline ClaimReport run_claim(const Context& ctx, const std::string& id, const RunOptions& opt) {
    for (const ClaimEntry& e : claim_catalogue()) {
        if (id != e.id) continue;
        claims_detail::Timer timer;
        ClaimReport r = e.fn(ctx, opt);
        r.elapsed_ms = timer.ms();
        return r;
    }
    throw UnknownClaim("no claim with id " + id);
}

inline std::vector<ClaimReport> run_all(const Context& ctx, const RunOptions& opt,
                                        const std::vector<std::string>& subset = {}) {
    std::vector<ClaimReport> out;
    if (subset.empty()) {
        for (const ClaimEntry& e : claim_catalogue()) out.push_back(run_claim(ctx, e.id, opt));
        return out;
    }
    std::vector<std::string> ids = subset;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const std::string& id : ids) out.push_back(run_claim(ctx, id, opt));
    return out;
}

}  // namespace fourfold
