// Shared builders and independent oracles for the unit tests.  Oracles here
// deliberately use a different algorithm than the library implementation.
#pragma once

#include <vector>

#include "defectlab/hompoly.hpp"
#include "defectlab/matrix.hpp"
#include "defectlab/mpoly.hpp"
#include "defectlab/rational.hpp"
#include "defectlab/rng.hpp"
#include "defectlab/unipoly.hpp"

namespace testutil {

using defectlab::HomPoly;
using defectlab::MPoly;
using defectlab::MultiIndex;
using defectlab::QPoly;
using defectlab::RatMatrix;
using defectlab::Rational;
using defectlab::Rng;

inline QPoly qp(std::initializer_list<int> ascending) {
    std::vector<Rational> c;
    for (int v : ascending) c.emplace_back(v);
    return QPoly(std::move(c));
}

// Linear form c0*x0 + ... + cn*xn in P^n.
inline HomPoly linear_form(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    HomPoly p(n, 1);
    for (int i = 0; i <= n; ++i) {
        MultiIndex e(static_cast<std::size_t>(n) + 1, 0);
        e[static_cast<std::size_t>(i)] = 1;
        if (c[static_cast<std::size_t>(i)] != 0)
            p.set_coeff(e, Rational(c[static_cast<std::size_t>(i)]));
    }
    return p;
}

inline RatMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.next_int(-9, 9));
    return m;
}

// Textbook Gauss-Jordan RREF over Q: partial pivot by first nonzero, scale
// to 1, eliminate everywhere.  Independent of the library's fraction-free
// elimination path.
inline std::pair<RatMatrix, std::size_t> naive_rref(RatMatrix m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv = Rational(1) / m.at(pivot_row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return {m, pivot_row};
}

// Determinant by Laplace expansion along the first row (exponential; use on
// tiny matrices only).
inline Rational laplace_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor.at(i - 1, jj++) = m.at(i, j);
            }
        }
        const Rational term = m.at(0, c) * laplace_det(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

// Laplace expansion for polynomial matrices.
inline MPoly mpoly_laplace_det(const std::vector<std::vector<MPoly>>& m) {
    const std::size_t n = m.size();
    const int vars = m[0][0].vars();
    if (n == 1) return m[0][0];
    MPoly acc = MPoly::constant(vars, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        const MPoly term = m[0][c] * mpoly_laplace_det(minor);
        if (c % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Substitute affine-linear expressions for the variables of p (term-wise
// expansion); subs[i] replaces z_{i+1}.
inline MPoly mpoly_substitute(const MPoly& p, const std::vector<MPoly>& subs) {
    const int m = subs[0].vars();
    MPoly acc = MPoly::constant(m, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        MPoly term = MPoly::constant(m, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * subs[i].pow(static_cast<unsigned>(e[i]));
        acc += term;
    }
    return acc;
}

} // namespace testutil
