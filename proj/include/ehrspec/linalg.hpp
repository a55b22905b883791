#pragma once

#include "ehrspec/rat.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ehrspec {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

// In-place fraction-free (Bareiss) elimination over the first `n` columns of
// an n-row matrix that may carry extra augmented columns. Returns the sign of
// the row permutation, or 0 if a zero pivot column is met (singular).
template <class Int>
int bareiss_eliminate(Matrix<Int> &m, std::size_t n) {
    int sign = 1;
    Int prev = 1;
    const std::size_t cols = n == 0 ? 0 : m[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign;
}

} // namespace detail

/// Exact determinant of a square integer matrix.
template <class Int>
Int determinant(Matrix<Int> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    for (const auto &row : m)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    int sign = detail::bareiss_eliminate(m, n);
    if (sign == 0) return Int(0);
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

/// Solves a x = b for square integer a. Returns nullopt when a is singular.
inline std::optional<std::vector<Rat>> solve(Matrix<BigInt> a, const std::vector<BigInt> &b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidInput("solve: right-hand side size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw InvalidInput("solve: non-square system");
        a[i].push_back(b[i]);
    }
    if (detail::bareiss_eliminate(a, n) == 0) return std::nullopt;
    std::vector<Rat> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc = a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(a[i][j]) * x[j];
        x[i] = acc / Rat(a[i][i]);
    }
    return x;
}

/// Rational variant: each equation is scaled by the lcm of its denominators.
inline std::optional<std::vector<Rat>> solve(const Matrix<Rat> &a, const std::vector<Rat> &b) {
    Matrix<BigInt> ai(a.size());
    std::vector<BigInt> bi(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigInt l = b.at(i).den();
        for (const auto &v : a[i]) l = boost::multiprecision::lcm(l, v.den());
        for (const auto &v : a[i]) ai[i].push_back((v * Rat(l)).num());
        bi[i] = (b[i] * Rat(l)).num();
    }
    return solve(std::move(ai), bi);
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
inline std::vector<std::size_t> row_reduce(Matrix<Rat> &m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (auto &v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix<Rat> m) { return row_reduce(m).size(); }

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline Matrix<Rat> nullspace(Matrix<Rat> m, std::size_t cols) {
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix<Rat> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat dot(const std::vector<Rat> &u, const std::vector<std::int64_t> &v) {
    Rat s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * Rat(v[i]);
    return s;
}

inline Rat dot(const std::vector<Rat> &u, const std::vector<Rat> &v) {
    Rat s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

} // namespace ehrspec
