#include <doctest.h>

#include "defectlab/ideal.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::linear_form;

namespace {

// x_i as a HomPoly in P^n.
HomPoly coord(int n, int i) { return HomPoly::variable(n, i); }

} // namespace

TEST_CASE("graded piece of a principal ideal has the classical hilbert value") {
    // For one nonzero form g of degree d in P^n, multiplication by g is
    // injective, so dim (g)_D = binom(D-d+n, n) and the Hilbert value is
    // binom(D+n, n) - binom(D-d+n, n).
    HomPoly g(2, 2);
    g.set_coeff({2, 0, 0}, Rational(1));
    g.set_coeff({0, 1, 1}, Rational(-3));
    const GradedPiece piece = ideal_graded_piece({g}, 5);
    CHECK(piece.subspace.dim() == 10); // binom(3+2,2)
    CHECK(piece.hilbert == 11);        // 21 - 10
    CHECK(piece.subspace.ambient_dim() == 21);
}

TEST_CASE("two coprime linear forms in the plane") {
    const GradedPiece piece = ideal_graded_piece({coord(2, 0), coord(2, 1)}, 3);
    // Quotient is Q[x2] in degree 3: hilbert value 1.
    CHECK(piece.hilbert == 1);
}

TEST_CASE("projective locus classifies points, curves, emptiness") {
    SUBCASE("full coordinate ideal in the line is empty") {
        const LocusResult r = projective_locus({coord(1, 0), coord(1, 1)});
        CHECK(r.empty);
        CHECK(r.certificate_degree >= 1);
    }
    SUBCASE("one form in the line cuts out points") {
        const LocusResult r = projective_locus({HomPoly::monomial(1, {1, 1}, Rational(1))});
        CHECK_FALSE(r.empty);
        CHECK(r.dimension == 0);
    }
    SUBCASE("one plane in projective space has dimension one") {
        const LocusResult r = projective_locus({coord(2, 0)});
        CHECK_FALSE(r.empty);
        CHECK(r.dimension == 1);
    }
    SUBCASE("two planes meet in a point") {
        const LocusResult r = projective_locus({coord(2, 0), coord(2, 1)});
        CHECK_FALSE(r.empty);
        CHECK(r.dimension == 0);
    }
    SUBCASE("three coordinate planes have no common projective zero") {
        const LocusResult r = projective_locus({coord(2, 0), coord(2, 1), coord(2, 2)});
        CHECK(r.empty);
    }
    SUBCASE("powers keep emptiness") {
        const LocusResult r = projective_locus({coord(1, 0).pow(2), coord(1, 1).pow(2)});
        CHECK(r.empty);
    }
    SUBCASE("conic and a transverse line meet in points") {
        HomPoly conic(2, 2);
        conic.set_coeff({1, 1, 0}, Rational(1)); // x0 x1
        const LocusResult r = projective_locus({conic, coord(2, 2)});
        CHECK_FALSE(r.empty);
        CHECK(r.dimension == 0); // {(1:0:0), (0:1:0)}
    }
    SUBCASE("a line inside a reducible conic stays one-dimensional") {
        HomPoly conic(2, 2);
        conic.set_coeff({1, 1, 0}, Rational(1)); // x0 x1
        const LocusResult r = projective_locus({conic, coord(2, 0)});
        CHECK_FALSE(r.empty);
        CHECK(r.dimension == 1); // V(x0 x1) cap V(x0) = V(x0)
    }
}

TEST_CASE("locus window values are recorded") {
    const LocusResult r = projective_locus({coord(2, 0), coord(2, 1)});
    CHECK_FALSE(r.window.empty());
    for (const auto v : r.window) CHECK(v >= 1); // P^0 worth of points persists
}
