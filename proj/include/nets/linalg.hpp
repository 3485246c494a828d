#pragma once

#include <stdexcept>
#include <vector>

#include "nets/rational.hpp"

namespace nets {

using Matrix = std::vector<std::vector<Rational>>;

inline size_t matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline Rational determinant(Matrix m) {
    size_t n = m.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

/// Solves the square system a·x = b exactly; throws if singular.
inline std::vector<Rational> solve_linear(Matrix a, std::vector<Rational> b) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Basis of the kernel of a (not necessarily square) matrix.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix a) {
    size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<long> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<Rational> v(cols);
        v[c] = Rational(1);
        for (size_t c2 = 0; c2 < cols; ++c2)
            if (pivot_of_col[c2] >= 0) {
                size_t pr = static_cast<size_t>(pivot_of_col[c2]);
                v[c2] = -a[pr][c] / a[pr][c2];
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Elementary symmetric polynomial e_k of the given values.
inline Rational elementary_symmetric(const std::vector<Rational>& vals, size_t k) {
    if (k > vals.size()) return Rational(0);
    std::vector<Rational> e(k + 1);
    e[0] = Rational(1);
    for (const Rational& v : vals)
        for (size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += e[j - 1] * v;
    return e[k];
}

}  // namespace nets
