#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "defectlab/rational.hpp"

namespace defectlab {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Rational>& v);

    RatMatrix transposed() const;

    // Stacks this matrix on top of `below` (same column count).
    RatMatrix stacked(const RatMatrix& below) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

// Unique reduced row echelon form and rank.  Elimination is fraction-free
// (Bareiss) on denominator-cleared rows; pivots are normalized to 1 at the
// end, so the result is the canonical RREF over Q.
std::pair<RatMatrix, std::size_t> rref_rank(const RatMatrix& m);

// Basis of the right kernel {x : m x = 0}, one kernel vector per row.
RatMatrix nullspace(const RatMatrix& m);

// A linear subspace of Q^ambient stored as its canonical RREF basis, one
// basis vector per row.  Equal subspaces compare bit-identical.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Span of the rows of `generators`.
    static Subspace span(const RatMatrix& generators);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    Subspace sum(const Subspace& other) const;
    bool contains_vector(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    RatMatrix basis_; // RREF, no zero rows
};

// Incremental RREF accumulator: maintains a canonical RREF basis while
// vectors are inserted one at a time.  Used where a chain of subspaces is
// built by successive extensions.
class RrefAccumulator {
public:
    explicit RrefAccumulator(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    // Returns true iff v was independent of the current span (and was added).
    bool insert(std::vector<Rational> v);

    bool contains(const std::vector<Rational>& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    Subspace snapshot() const;

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_; // sorted by pivot column, pivots = 1
    std::vector<std::size_t> pivots_;
};

} // namespace defectlab
