#include <doctest.h>

#include "defectlab/matrix.hpp"
#include "defectlab/rng.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::laplace_det;
using testutil::naive_rref;
using testutil::random_matrix;

TEST_CASE("rref matches an independent gauss-jordan oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = trial % 2 == 0 ? 6 : 4;
        const std::size_t cols = trial % 2 == 0 ? 4 : 6;
        RatMatrix m = random_matrix(rows, cols, rng);
        if (trial % 3 == 0 && rows >= 2) m.set_row(1, m.row(0)); // force dependence
        const auto [lib, lib_rank] = rref_rank(m);
        const auto [oracle, oracle_rank] = naive_rref(m);
        CHECK(lib_rank == oracle_rank);
        CHECK(lib == oracle); // RREF is unique, so equality is exact
    }
}

TEST_CASE("nullspace vectors annihilate the matrix and span the kernel") {
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_matrix(5, 7, rng);
        const auto rank = rref_rank(m).second;
        const RatMatrix ker = nullspace(m);
        CHECK(ker.rows() == m.cols() - rank);
        for (std::size_t v = 0; v < ker.rows(); ++v)
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * ker.at(v, j);
                CHECK(dot.is_zero());
            }
        const auto ker_rank = rref_rank(ker).second;
        CHECK(ker_rank == ker.rows()); // kernel basis is independent
    }
}

TEST_CASE("subspace span is canonical") {
    Rng rng(5);
    const RatMatrix gen = random_matrix(4, 6, rng);
    RatMatrix shuffled(4, 6);
    shuffled.set_row(0, gen.row(2));
    shuffled.set_row(1, gen.row(0));
    shuffled.set_row(2, gen.row(3));
    shuffled.set_row(3, gen.row(1));
    const Subspace a = Subspace::span(gen);
    const Subspace b = Subspace::span(shuffled);
    CHECK(a == b); // bit-identical canonical basis
    CHECK(a.contains(b));
    CHECK(a.contains_vector(gen.row(1)));
    const Subspace s = a.sum(b);
    CHECK(s == a);
    CHECK(a.dim() <= 4);
    CHECK(a.ambient_dim() == 6);
}

TEST_CASE("rref accumulator tracks rank incrementally") {
    Rng rng(11);
    const RatMatrix m = random_matrix(6, 5, rng);
    RrefAccumulator acc(5);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const bool added = acc.insert(m.row(i));
        if (added) ++dim;
        CHECK(acc.dim() == dim);
        CHECK(acc.contains(m.row(i)));
    }
    const auto rank = rref_rank(m).second;
    CHECK(acc.dim() == rank);
    CHECK(acc.snapshot() == Subspace::span(m));

    std::vector<Rational> combo(5, Rational(0));
    for (std::size_t j = 0; j < 5; ++j) combo[j] = m.at(0, j) + m.at(1, j);
    CHECK_FALSE(acc.insert(combo)); // dependent vector is rejected
}

TEST_CASE("identity and transpose behave") {
    const RatMatrix id = RatMatrix::identity(3);
    CHECK(laplace_det(id) == Rational(1));
    Rng rng(9);
    const RatMatrix m = random_matrix(3, 3, rng);
    const RatMatrix mt = m.transposed();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == mt.at(j, i));
    CHECK(laplace_det(m) == laplace_det(mt));
    const RatMatrix stacked = m.stacked(id);
    CHECK(stacked.rows() == 6);
    CHECK(rref_rank(stacked).second == 3);
}
