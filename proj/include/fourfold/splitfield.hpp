#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "fourfold/galois.hpp"
#include "fourfold/linalg.hpp"
#include "fourfold/quartic.hpp"

namespace fourfold {

// An element of L = Q(x1,x2,x3,x4)[i] in Cauchy-module normal form: x4 is
// eliminated through x4 = -x1-x2-x3 and the exponents are capped at
// e1 <= 3, e2 <= 2, e3 <= 1, e4 <= 1 (e4 is the power of i). Equality of
// elements is equality of the 48 coordinates.
struct SplitElem {
    std::array<Rat, 48> c{};

    bool operator==(const SplitElem& o) const { return c == o.c; }
    bool is_zero() const {
        for (const Rat& v : c)
            if (v != 0) return false;
        return true;
    }

    SplitElem& operator+=(const SplitElem& o) {
        for (int k = 0; k < 48; ++k) c[k] += o.c[k];
        return *this;
    }
    SplitElem& operator-=(const SplitElem& o) {
        for (int k = 0; k < 48; ++k) c[k] -= o.c[k];
        return *this;
    }
    SplitElem& operator*=(const Rat& s) {
        for (Rat& v : c) v *= s;
        return *this;
    }
};

inline SplitElem operator+(SplitElem a, const SplitElem& b) { return a += b; }
inline SplitElem operator-(SplitElem a, const SplitElem& b) { return a -= b; }
inline SplitElem operator-(const SplitElem& a) {
    SplitElem r;
    for (int k = 0; k < 48; ++k) r.c[k] = -a.c[k];
    return r;
}
inline SplitElem operator*(const Rat& s, SplitElem a) { return a *= s; }

constexpr int elem_index(int e1, int e2, int e3, int e4) {
    return ((e1 * 3 + e2) * 2 + e3) * 2 + e4;
}

// Polynomial in x1..x4 and i before reduction; exponent tuple -> coefficient.
struct RawPoly {
    std::map<std::array<int, 5>, Rat> t;

    void add(int e1, int e2, int e3, int e4, int ei, const Rat& coeff) {
        if (coeff == 0) return;
        Rat& slot = t[{e1, e2, e3, e4, ei}];
        slot += coeff;
        if (slot == 0) t.erase({e1, e2, e3, e4, ei});
    }
};

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
    RawPoly r;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t)
            r.add(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3], ea[4] + eb[4],
                  ca * cb);
    return r;
}

inline RawPoly raw_var(int j) {  // x_{j+1}, j in 0..3
    RawPoly r;
    std::array<int, 5> e{0, 0, 0, 0, 0};
    e[j] = 1;
    r.t[e] = 1;
    return r;
}

struct FieldConstants {
    SplitElem D;        // the ordered Vandermonde product, positive at the identity
    SplitElem iD;       // i*D, generator of F over F1
    Rat delta;          // D^2, rational by construction
    SplitElem h2, h3, h4;
    std::array<SplitElem, 4> mu;  // mu_j = prod_{k != j} (x_j - x_k)
    SplitElem cm_a;     // 1 + i*D, the complex-multiplication integer
    SplitElem cm_b;     // i*D
};

// Per-quartic arithmetic context: multiplication tables for the 48 basis
// monomials, the Galois action, the field constants and a refinable root
// enclosure. Built once; all operations are const.
class FieldContext {
  public:
    explicit FieldContext(const Quartic& quartic)
        : q_(quartic), pp_(quartic.p()), qq_(quartic.q()), rr_(quartic.r()) {
        build_mul_table();
        build_galois_tables();
        build_constants();
        enc_ = isolate_roots(q_, 32);
    }

    const Quartic& quartic() const { return q_; }
    const FieldConstants& k() const { return consts_; }

    // --- element constructors -------------------------------------------
    static SplitElem zero() { return {}; }
    static SplitElem one() { return from_rat(Rat(1)); }
    static SplitElem from_rat(const Rat& v) {
        SplitElem e;
        e.c[0] = v;
        return e;
    }
    SplitElem x(int j) const { return xs_[j]; }  // x_{j+1}, j in 0..3
    static SplitElem unit_i() {
        SplitElem e;
        e.c[elem_index(0, 0, 0, 1)] = 1;
        return e;
    }

    // --- ring / field operations ----------------------------------------
    SplitElem reduce(const RawPoly& raw) const {
        SplitElem out;
        for (const auto& [e, coeff] : raw.t) {
            // i^k cycles with period 4
            const int k = e[4] & 3;
            Rat c = (k >= 2) ? -coeff : coeff;
            const int e4 = k & 1;
            // substitute x4 = -(x1+x2+x3)
            const int n = e[3];
            for (int a = 0; a <= n; ++a)
                for (int b = 0; a + b <= n; ++b) {
                    const int cc = n - a - b;
                    Rat m = c * binom(n, a) * binom(n - a, b);
                    if (n & 1) m = -m;
                    accumulate(out, mono(e[0] + a, e[1] + b, e[2] + cc, e4), m);
                }
        }
        return out;
    }

    SplitElem mul(const SplitElem& u, const SplitElem& v) const {
        SplitElem out;
        for (int i = 0; i < 48; ++i) {
            if (u.c[i] == 0) continue;
            for (int j = 0; j < 48; ++j) {
                if (v.c[j] == 0) continue;
                const Rat w = u.c[i] * v.c[j];
                for (const auto& [k, t] : mul_table_[i][j]) out.c[k] += w * t;
            }
        }
        return out;
    }

    SplitElem square(const SplitElem& u) const { return mul(u, u); }

    SplitElem pow(const SplitElem& u, unsigned e) const {
        SplitElem acc = one(), b = u;
        while (e) {
            if (e & 1u) acc = mul(acc, b);
            b = mul(b, b);
            e >>= 1u;
        }
        return acc;
    }

    // Exact inverse via the multiplication-by-u matrix and a fraction-free
    // linear solve.
    SplitElem inv(const SplitElem& u) const {
        if (u.is_zero()) throw DivisionByZero("inverse of zero");
        QMatrix m(48, std::vector<Rat>(48, Rat(0)));
        for (int i = 0; i < 48; ++i) {
            if (u.c[i] == 0) continue;
            for (int j = 0; j < 48; ++j)
                for (const auto& [k, t] : mul_table_[i][j]) m[k][j] += u.c[i] * t;
        }
        std::vector<Rat> rhs(48, Rat(0));
        rhs[0] = 1;
        auto sol = solve_bareiss(m, rhs);
        if (!sol)
            throw SingularMultiplication(
                "multiplication matrix singular: algebra is not a field");
        SplitElem out;
        for (int k = 0; k < 48; ++k) out.c[k] = (*sol)[k];
        return out;
    }

    SplitElem div(const SplitElem& u, const SplitElem& v) const { return mul(u, inv(v)); }

    // Galois action: sigma permutes the root symbols, eps conjugates i.
    SplitElem galois(const GaloisElem& g, const SplitElem& u) const {
        const auto& images = gal_table_[g.index()];
        SplitElem out;
        for (int i = 0; i < 48; ++i) {
            if (u.c[i] == 0) continue;
            for (const auto& [k, t] : images[i]) out.c[k] += u.c[i] * t;
        }
        return out;
    }

    SplitElem conj(const SplitElem& u) const {
        SplitElem out = u;
        for (int i = 0; i < 48; ++i)
            if (i & 1) out.c[i] = -out.c[i];
        return out;
    }

    bool is_real(const SplitElem& u) const {
        for (int i = 0; i < 48; ++i)
            if ((i & 1) && u.c[i] != 0) return false;
        return true;
    }

    std::optional<Rat> is_rational(const SplitElem& u) const {
        for (int i = 1; i < 48; ++i)
            if (u.c[i] != 0) return std::nullopt;
        return u.c[0];
    }

    // --- certified numeric evaluation at the identity embedding ----------
    const RootEnclosure& roots(int bits) const {
        enc_.refine_to(bits);
        return enc_;
    }

    ComplexBox eval_box(const SplitElem& u, int bits) const {
        const RootEnclosure& e = roots(bits);
        std::array<std::array<QInterval, 4>, 3> pw;
        for (int v = 0; v < 3; ++v) {
            pw[v][0] = QInterval(Rat(1));
            for (int k = 1; k < 4; ++k) pw[v][k] = pw[v][k - 1] * e.iv[v];
        }
        ComplexBox out;
        for (int i = 0; i < 48; ++i) {
            if (u.c[i] == 0) continue;
            const int e4 = i & 1, e3 = (i >> 1) & 1, e2 = (i >> 2) % 3, e1 = i / 12;
            QInterval term = u.c[i] * (pw[0][e1] * pw[1][e2] * pw[2][e3]);
            if (e4)
                out.im = out.im + term;
            else
                out.re = out.re + term;
        }
        return out;
    }

    // Certified sign of a conjugation-fixed element at the identity
    // embedding. Exact zero test first, then interval refinement; a nonzero
    // field element has nonzero value, so this terminates. When width_bits
    // is set the returned enclosure is also narrowed below 2^-width_bits.
    int sign_at_identity(const SplitElem& u, int width_bits = 0,
                         QInterval* enclosure = nullptr) const {
        if (!is_real(u)) throw NotReal("sign of a non-real element");
        if (u.is_zero()) {
            if (enclosure) *enclosure = QInterval(Rat(0));
            return 0;
        }
        int bits = std::max(enc_.bits, 32);
        while (true) {
            ComplexBox box = eval_box(u, bits);
            const bool narrow = width_bits == 0 || box.re.width() <= pow2(-width_bits);
            if (narrow && box.re.sign() != 0) {
                if (enclosure) *enclosure = box.re;
                return box.re.sign();
            }
            bits += 64;
        }
    }

  private:
    static Rat binom(int n, int k) {
        Int out;
        mpz_bin_uiui(out.get_mpz_t(), n, k);
        return rat(out);
    }

    // Normal form of x1^e1 x2^e2 x3^e3 i^e4 (e4 already 0/1); memoized.
    const SplitElem& mono(int e1, int e2, int e3, int e4) const {
        const std::array<int, 4> key{e1, e2, e3, e4};
        auto it = mono_memo_.find(key);
        if (it != mono_memo_.end()) return it->second;
        SplitElem out;
        if (e3 >= 2) {
            // x3^2 = -(x1+x2) x3 - (x1^2 + x1 x2 + x2^2 + p)
            accumulate(out, mono(e1 + 1, e2, e3 - 1, e4), Rat(-1));
            accumulate(out, mono(e1, e2 + 1, e3 - 1, e4), Rat(-1));
            accumulate(out, mono(e1 + 2, e2, e3 - 2, e4), Rat(-1));
            accumulate(out, mono(e1 + 1, e2 + 1, e3 - 2, e4), Rat(-1));
            accumulate(out, mono(e1, e2 + 2, e3 - 2, e4), Rat(-1));
            accumulate(out, mono(e1, e2, e3 - 2, e4), -pp_);
        } else if (e2 >= 3) {
            // x2^3 = -x1 x2^2 - (x1^2 + p) x2 - (x1^3 + p x1 + q)
            accumulate(out, mono(e1 + 1, e2 - 1, e3, e4), Rat(-1));
            accumulate(out, mono(e1 + 2, e2 - 2, e3, e4), Rat(-1));
            accumulate(out, mono(e1, e2 - 2, e3, e4), -pp_);
            accumulate(out, mono(e1 + 3, e2 - 3, e3, e4), Rat(-1));
            accumulate(out, mono(e1 + 1, e2 - 3, e3, e4), -pp_);
            accumulate(out, mono(e1, e2 - 3, e3, e4), -qq_);
        } else if (e1 >= 4) {
            // x1^4 = -p x1^2 - q x1 - r
            accumulate(out, mono(e1 - 2, e2, e3, e4), -pp_);
            accumulate(out, mono(e1 - 3, e2, e3, e4), -qq_);
            accumulate(out, mono(e1 - 4, e2, e3, e4), -rr_);
        } else {
            out.c[elem_index(e1, e2, e3, e4)] = 1;
        }
        return mono_memo_.emplace(key, std::move(out)).first->second;
    }

    static void accumulate(SplitElem& acc, const SplitElem& v, const Rat& s) {
        if (s == 0) return;
        for (int k = 0; k < 48; ++k)
            if (v.c[k] != 0) acc.c[k] += s * v.c[k];
    }

    using SparseVec = std::vector<std::pair<int, Rat>>;

    static SparseVec sparsify(const SplitElem& e) {
        SparseVec v;
        for (int k = 0; k < 48; ++k)
            if (e.c[k] != 0) v.emplace_back(k, e.c[k]);
        return v;
    }

    void build_mul_table() {
        for (int i = 0; i < 48; ++i) {
            const int i4 = i & 1, i3 = (i >> 1) & 1, i2 = (i >> 2) % 3, i1 = i / 12;
            for (int j = 0; j <= i; ++j) {
                const int j4 = j & 1, j3 = (j >> 1) & 1, j2 = (j >> 2) % 3, j1 = j / 12;
                SplitElem prod;
                if (i4 + j4 == 2)
                    accumulate(prod, mono(i1 + j1, i2 + j2, i3 + j3, 0), Rat(-1));
                else
                    prod = mono(i1 + j1, i2 + j2, i3 + j3, i4 + j4);
                mul_table_[i][j] = sparsify(prod);
                mul_table_[j][i] = mul_table_[i][j];
            }
        }
    }

    void build_galois_tables() {
        gal_table_.resize(48);
        for (const GaloisElem& g : all_galois()) {
            auto& images = gal_table_[g.index()];
            for (int i = 0; i < 48; ++i) {
                const int e4 = i & 1, e3 = (i >> 1) & 1, e2 = (i >> 2) % 3, e1 = i / 12;
                RawPoly raw;
                std::array<int, 5> ex{0, 0, 0, 0, e4};
                ex[g.sigma(0)] += e1;
                ex[g.sigma(1)] += e2;
                ex[g.sigma(2)] += e3;
                Rat coeff(1);
                if (g.eps && e4) coeff = -1;
                raw.t[ex] = coeff;
                images[i] = sparsify(reduce(raw));
            }
        }
    }

    void build_constants() {
        for (int j = 0; j < 4; ++j) xs_[j] = reduce(raw_var(j));

        RawPoly vandermonde;
        vandermonde.t[{0, 0, 0, 0, 0}] = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                RawPoly diff;
                diff.add(i == 0, i == 1, i == 2, i == 3, 0, Rat(1));
                diff.add(j == 0, j == 1, j == 2, j == 3, 0, Rat(-1));
                vandermonde = raw_mul(vandermonde, diff);
            }
        consts_.D = reduce(vandermonde);
        consts_.iD = mul(consts_.D, unit_i());

        const auto delta = is_rational(mul(consts_.D, consts_.D));
        if (!delta) throw Error("D^2 failed to reduce to a rational");
        consts_.delta = *delta;
        if (consts_.delta != quartic_delta(q_))
            throw Error("D^2 disagrees with the discriminant");

        auto pair_sum = [&](int i, int j, int k, int l) {
            RawPoly r;
            std::array<int, 5> e1{0, 0, 0, 0, 0}, e2{0, 0, 0, 0, 0};
            e1[i] = e1[j] = 1;
            e2[k] = e2[l] = 1;
            r.t[e1] = 1;
            r.t[e2] = 1;
            return reduce(r);
        };
        consts_.h2 = pair_sum(0, 1, 2, 3);
        consts_.h3 = pair_sum(0, 2, 1, 3);
        consts_.h4 = pair_sum(0, 3, 1, 2);

        for (int j = 0; j < 4; ++j) {
            RawPoly prod;
            prod.t[{0, 0, 0, 0, 0}] = 1;
            for (int k = 0; k < 4; ++k) {
                if (k == j) continue;
                RawPoly diff;
                diff.add(j == 0, j == 1, j == 2, j == 3, 0, Rat(1));
                diff.add(k == 0, k == 1, k == 2, k == 3, 0, Rat(-1));
                prod = raw_mul(prod, diff);
            }
            consts_.mu[j] = reduce(prod);
        }
        consts_.cm_a = one() + consts_.iD;
        consts_.cm_b = consts_.iD;
    }

    Quartic q_;
    Rat pp_, qq_, rr_;
    std::array<std::array<SparseVec, 48>, 48> mul_table_;
    std::vector<std::array<SparseVec, 48>> gal_table_;
    mutable std::map<std::array<int, 4>, SplitElem> mono_memo_;
    std::array<SplitElem, 4> xs_;
    FieldConstants consts_;
    mutable RootEnclosure enc_;
};

}  // namespace fourfold
