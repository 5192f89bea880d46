#pragma once

// Exact Gaussian elimination over a field: BigRational for specialised checks,
// RationalFn for the symbolic paths.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace qss {

template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {
inline bool field_is_zero(const BigRational& x) { return x == 0; }
inline bool field_is_zero(const RationalFn& x) { return x.is_zero(); }
}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && detail::field_is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const F inv = F(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j)
            if (!detail::field_is_zero(a[r][j])) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::field_is_zero(a[i][c])) continue;
            const F f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!detail::field_is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
    return row_reduce(a).size();
}

/// Basis of {x : a x = 0}.
template <class F>
Matrix<F> kernel(Matrix<F> a, std::size_t cols) {
    const auto pivots = row_reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<F> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> x(cols, F(0));
        x[free] = F(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = F(0) - a[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Solve a x = b for one x; returns false when inconsistent.
template <class F>
bool solve(const Matrix<F>& a, const std::vector<F>& b, std::vector<F>& x) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    const auto pivots = row_reduce(aug);
    x.assign(cols, F(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return false;
        x[pivots[i]] = aug[i][cols];
    }
    return true;
}

/// Inverse of a square matrix; throws if singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, F(0));
        aug[i][n + i] = F(1);
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] >= n) throw std::domain_error("singular matrix");
    Matrix<F> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return out;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix<F> c(n, std::vector<F>(m, F(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (detail::field_is_zero(a[i][t])) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!detail::field_is_zero(b[t][j])) c[i][j] = c[i][j] + a[i][t] * b[t][j];
        }
    return c;
}

}  // namespace qss
