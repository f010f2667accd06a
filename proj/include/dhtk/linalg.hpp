#pragma once

// Small dense exact linear algebra over the rationals: determinants, rank,
// solving, nullspaces. Everything is Gaussian elimination at desk scale.

#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace dhtk {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

namespace linalg {

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Row echelon reduction in place; returns (rank, pivot column per step).
// Optionally tracks the determinant sign for square inputs.
inline size_t echelon(RatMat& m, std::vector<size_t>* pivot_cols = nullptr,
                      int* det_sign = nullptr) {
    if (det_sign)
        *det_sign = 1;
    if (m.empty())
        return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            if (det_sign)
                *det_sign = -*det_sign;
        }
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero())
                continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        if (pivot_cols)
            pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

inline size_t rank(RatMat m) { return echelon(m); }

inline Rational det(RatMat m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det: not square");
    int sign = 1;
    size_t r = echelon(m, nullptr, &sign);
    if (r < n)
        return Rational(0);
    Rational d(sign);
    for (size_t i = 0; i < n; ++i)
        d *= m[i][i];
    return d;
}

// Any solution of A x = b, or disengaged if the system is inconsistent.
// Free variables are set to zero.
inline std::optional<RatVec> solve(RatMat a, RatVec b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (size_t i = 0; i < rows; ++i)
        a[i].push_back(b.at(i));
    std::vector<size_t> pivots;
    size_t r = echelon(a, &pivots);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    RatVec x(cols, Rational(0));
    for (size_t k = r; k-- > 0;) {
        size_t c = pivots[k];
        Rational s = a[k][cols];
        for (size_t j = c + 1; j < cols; ++j)
            s -= a[k][j] * x[j];
        x[c] = s / a[k][c];
    }
    return x;
}

// Unique solution of a square nonsingular system, disengaged when singular.
inline std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
    const size_t n = a.size();
    RatMat m = a;
    std::vector<size_t> pivots;
    for (size_t i = 0; i < n; ++i)
        m[i].push_back(b.at(i));
    size_t r = echelon(m, &pivots);
    if (!pivots.empty() && pivots.back() == n)
        return std::nullopt;  // inconsistent
    if (r < n)
        return std::nullopt;  // singular
    RatVec x(n, Rational(0));
    for (size_t k = n; k-- > 0;) {
        size_t c = pivots[k];
        Rational s = m[k][n];
        for (size_t j = c + 1; j < n; ++j)
            s -= m[k][j] * x[j];
        x[c] = s / m[k][c];
    }
    return x;
}

// Basis of the nullspace of A (columns = unknowns).
inline std::vector<RatVec> nullspace(RatMat a) {
    if (a.empty())
        return {};
    const size_t cols = a[0].size();
    std::vector<size_t> pivots;
    size_t r = echelon(a, &pivots);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        RatVec x(cols, Rational(0));
        x[free_c] = Rational(1);
        for (size_t k = r; k-- > 0;) {
            size_t c = pivots[k];
            Rational s(0);
            for (size_t j = c + 1; j < cols; ++j)
                s -= a[k][j] * x[j];
            x[c] = s / a[k][c];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace linalg
}  // namespace dhtk
