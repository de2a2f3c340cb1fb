#include "defectlab/matrix.hpp"

#include <algorithm>

namespace defectlab {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, ErrorKind::InvalidInput,
            "matrix entry count does not match rows*cols");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

std::vector<Rational> RatMatrix::row(std::size_t i) const {
    return std::vector<Rational>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

void RatMatrix::set_row(std::size_t i, const std::vector<Rational>& v) {
    require(v.size() == cols_, ErrorKind::AmbientMismatch, "row length mismatch");
    std::copy(v.begin(), v.end(), entries_.begin() + i * cols_);
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::stacked(const RatMatrix& below) const {
    require(cols_ == below.cols_ || rows_ == 0 || below.rows_ == 0, ErrorKind::AmbientMismatch,
            "stacking matrices with different column counts");
    std::size_t cols = rows_ ? cols_ : below.cols_;
    RatMatrix s(rows_ + below.rows_, cols);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) s.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) s.at(rows_ + i, j) = below.at(i, j);
    return s;
}

namespace {

// Integer row matrix with exact content-stripped rows.
struct IntRows {
    std::size_t cols = 0;
    std::vector<std::vector<Int>> rows;
};

// Clears denominators row by row and strips integer content so entries stay
// small before elimination starts.
IntRows clear_denominators(const RatMatrix& m) {
    IntRows out;
    out.cols = m.cols();
    out.rows.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = int_lcm(l, m.at(i, j).denominator());
        std::vector<Int> r(m.cols());
        Int content = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r[j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
            content = int_gcd(content, r[j]);
        }
        if (content > 1)
            for (auto& x : r) x /= content;
        out.rows[i] = std::move(r);
    }
    return out;
}

void strip_content(std::vector<Int>& r) {
    Int g = 0;
    for (const auto& x : r) g = int_gcd(g, x);
    if (g > 1)
        for (auto& x : r) x /= g;
}

} // namespace

std::pair<RatMatrix, std::size_t> rref_rank(const RatMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    IntRows w = clear_denominators(m);

    // Fraction-free forward elimination (Bareiss).
    std::vector<std::size_t> pivot_cols;
    Int prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && w.rows[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(w.rows[r], w.rows[p]);
        const Int pivot = w.rows[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            // Every row below the pivot gets the Sylvester-identity update,
            // including rows with a zero in column c; divisions stay exact.
            for (std::size_t j = 0; j < nc; ++j) {
                if (j == c) continue;
                Int t = w.rows[i][j] * pivot - w.rows[i][c] * w.rows[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                w.rows[i][j] = std::move(t);
            }
            w.rows[i][c] = 0;
        }
        prev_pivot = pivot;
        pivot_cols.push_back(c);
        ++r;
    }
    const std::size_t rank = r;

    // Back-eliminate above each pivot, stripping content to bound growth.
    for (std::size_t k = rank; k-- > 0;) {
        const std::size_t c = pivot_cols[k];
        strip_content(w.rows[k]);
        const Int& pivot = w.rows[k][c];
        for (std::size_t i = 0; i < k; ++i) {
            if (w.rows[i][c] == 0) continue;
            const Int coef = w.rows[i][c];
            for (std::size_t j = 0; j < nc; ++j)
                w.rows[i][j] = w.rows[i][j] * pivot - coef * w.rows[k][j];
            strip_content(w.rows[i]);
        }
    }

    // Normalize pivots to 1.
    RatMatrix out(nr, nc);
    for (std::size_t i = 0; i < rank; ++i) {
        const Int& pivot = w.rows[i][pivot_cols[i]];
        for (std::size_t j = 0; j < nc; ++j)
            if (w.rows[i][j] != 0) out.at(i, j) = Rational(w.rows[i][j], pivot);
    }
    return {std::move(out), rank};
}

RatMatrix nullspace(const RatMatrix& m) {
    const std::size_t nc = m.cols();
    auto [rref, rank] = rref_rank(m);

    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j < nc && rref.at(i, j).is_zero()) ++j;
        pivot_col[i] = j;
        is_pivot[j] = true;
    }

    RatMatrix kernel(nc - rank, nc);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        kernel.at(k, free_col) = Rational(1);
        for (std::size_t i = 0; i < rank; ++i)
            kernel.at(k, pivot_col[i]) = -rref.at(i, free_col);
        ++k;
    }
    return kernel;
}

Subspace Subspace::span(const RatMatrix& generators) {
    Subspace s(generators.cols());
    auto [rref, rank] = rref_rank(generators);
    RatMatrix basis(rank, generators.cols());
    for (std::size_t i = 0; i < rank; ++i) basis.set_row(i, rref.row(i));
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::sum(const Subspace& other) const {
    require(ambient_ == other.ambient_, ErrorKind::AmbientMismatch,
            "subspace sum with different ambient dimensions");
    return span(basis_.stacked(other.basis_));
}

bool Subspace::contains_vector(const std::vector<Rational>& v) const {
    require(v.size() == ambient_, ErrorKind::AmbientMismatch,
            "vector length differs from ambient dimension");
    // Reduce v against the RREF basis; containment iff the residue is zero.
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_ || w[p].is_zero()) continue;
        const Rational c = w[p];
        for (std::size_t j = p; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) return false;
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains_vector(other.basis_.row(i))) return false;
    return true;
}

bool RrefAccumulator::insert(std::vector<Rational> v) {
    require(v.size() == ambient_, ErrorKind::AmbientMismatch,
            "vector length differs from ambient dimension");
    // Reduce against current rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p].is_zero()) continue;
        const Rational c = v[p];
        const auto& row = rows_[i];
        for (std::size_t j = p; j < ambient_; ++j)
            if (!row[j].is_zero()) v[j] -= c * row[j];
    }
    std::size_t lead = 0;
    while (lead < ambient_ && v[lead].is_zero()) ++lead;
    if (lead == ambient_) return false;

    // Normalize and eliminate the new pivot column from existing rows.
    const Rational inv = Rational(1) / v[lead];
    for (std::size_t j = lead; j < ambient_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto& row = rows_[i];
        if (row[lead].is_zero()) continue;
        const Rational c = row[lead];
        for (std::size_t j = lead; j < ambient_; ++j)
            if (!v[j].is_zero()) row[j] -= c * v[j];
    }

    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
}

bool RrefAccumulator::contains(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (w[p].is_zero()) continue;
        const Rational c = w[p];
        const auto& row = rows_[i];
        for (std::size_t j = p; j < ambient_; ++j)
            if (!row[j].is_zero()) w[j] -= c * row[j];
    }
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

Subspace RrefAccumulator::snapshot() const {
    RatMatrix basis(rows_.size(), ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) basis.set_row(i, rows_[i]);
    return Subspace::span(basis); // already RREF; span() re-canonicalizes cheaply
}

} // namespace defectlab
