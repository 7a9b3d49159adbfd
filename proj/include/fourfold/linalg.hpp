#pragma once

#include <optional>
#include <vector>

#include "fourfold/rational.hpp"

namespace fourfold {

using QMatrix = std::vector<std::vector<Rat>>;

// Row echelon reduction in place, returning the rank and recording pivot
// columns. Exact rational arithmetic.
inline int qge_echelon(QMatrix& m, std::vector<int>* pivot_cols = nullptr) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        const Rat inv_p = Rat(1) / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv_p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline int qrank(QMatrix m) { return qge_echelon(m); }

// Basis of {x : M x = 0}, from the reduced echelon form.
inline std::vector<std::vector<Rat>> qnullspace(QMatrix m) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivots;
    qge_echelon(m, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m[pr][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free (Bareiss) solve of A x = b. Rows are first scaled to clear
// denominators, then eliminated over the integers so intermediate entries
// stay divisions-exact; back substitution returns exact rationals.
// Returns nullopt when A is singular.
inline std::optional<std::vector<Rat>> solve_bareiss(const QMatrix& a_in,
                                                     const std::vector<Rat>& b_in) {
    const int n = static_cast<int>(a_in.size());
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
    for (int r = 0; r < n; ++r) {
        Int lcm = 1;
        for (int c = 0; c <= n; ++c) {
            const Rat& v = c < n ? a_in[r][c] : b_in[r];
            Int den(v.get_den());
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (int c = 0; c <= n; ++c) {
            const Rat& v = c < n ? a_in[r][c] : b_in[r];
            m[r][c] = Int(v.get_num()) * (lcm / Int(v.get_den()));
        }
    }
    Int prev(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[k], m[piv]);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c <= n; ++c) {
                Int num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                m[r][c] = num / prev;  // exact by the Bareiss identity
            }
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    std::vector<Rat> x(n);
    for (int r = n - 1; r >= 0; --r) {
        Rat acc = rat(m[r][n]);
        for (int c = r + 1; c < n; ++c) acc -= rat(m[r][c]) * x[c];
        if (m[r][r] == 0) return std::nullopt;
        x[r] = acc / rat(m[r][r]);
    }
    return x;
}

// Determinant via rational elimination; used for small resultant matrices.
inline Rat qdeterminant(QMatrix m) {
    const int n = static_cast<int>(m.size());
    Rat det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = -det;
        }
        det *= m[k][k];
        const Rat inv_p = Rat(1) / m[k][k];
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k] == 0) continue;
            const Rat f = m[r][k] * inv_p;
            for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

}  // namespace fourfold
