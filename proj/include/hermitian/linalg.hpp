// Dense linear algebra over GF(q^2): row reduction, rank, null spaces, inverses.
#pragma once

#include "hermitian/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace herm {

using Row = std::vector<Elem>;
using Matrix = std::vector<Row>;

/// In-place reduced row echelon form. Returns the rank; zero rows are removed.
inline std::size_t rref(const Field& f, Matrix& m)
{
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const Elem scale = f.inv(m[rank][c]);
        for (auto& x : m[rank]) x = f.mul(x, scale);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            const Elem factor = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

inline std::size_t rank(const Field& f, Matrix m) { return rref(f, m); }

/// Basis of {x : m x = 0}, one vector per free column.
inline Matrix nullspace(const Field& f, Matrix m, std::size_t cols)
{
    rref(f, m);
    std::vector<std::size_t> pivots;
    for (const auto& row : m) {
        std::size_t c = 0;
        while (row[c].is_zero()) ++c;
        pivots.push_back(c);
    }
    Matrix basis;
    std::size_t next_pivot = 0;
    for (std::size_t free = 0; free < cols; ++free) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
            ++next_pivot;
            continue;
        }
        Row v(cols, kZero);
        v[free] = kOne;
        for (std::size_t r = 0; r < m.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Gauss-Jordan inverse of a square matrix; nullopt when singular.
inline std::optional<Matrix> inverse(const Field& f, const Matrix& a)
{
    const std::size_t n = a.size();
    Matrix aug(n, Row(2 * n, kZero));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = kOne;
    }
    if (rref(f, aug) < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (aug[i][i] != kOne) return std::nullopt;
    Matrix inv(n, Row(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b)
{
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    Matrix out(a.size(), Row(cols, kZero));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
        }
    return out;
}

inline Matrix transpose(const Matrix& a)
{
    if (a.empty()) return {};
    Matrix t(a.front().size(), Row(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

/// Entrywise q-power.
inline Matrix conjugate(const Field& f, Matrix a)
{
    for (auto& row : a)
        for (auto& x : row) x = f.conj(x);
    return a;
}

} // namespace herm
