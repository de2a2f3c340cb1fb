#include <doctest.h>

#include "defectlab/gaussmap.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::mpoly_substitute;

namespace {

MPoly zv(int m, int i) { return MPoly::variable(m, i); }

PolyImmersion graph_surface() {
    // (z1, z2) -> (z1, z2, z1^2 + z2^2)
    PolyImmersion f;
    f.m = 2;
    f.n = 3;
    f.components = {zv(2, 0), zv(2, 1), zv(2, 0).pow(2) + zv(2, 1).pow(2)};
    return f;
}

} // namespace

TEST_CASE("gauss map of a graph surface lists jacobian minors in lex order") {
    const GaussRepresentation g = gauss_map(graph_surface());
    CHECK(g.m == 2);
    CHECK(g.n == 3);
    CHECK(g.N_amb == 2); // binom(3,2) - 1
    REQUIRE(g.column_subsets.size() == 3);
    CHECK(g.column_subsets[0] == std::vector<int>{0, 1});
    CHECK(g.column_subsets[1] == std::vector<int>{0, 2});
    CHECK(g.column_subsets[2] == std::vector<int>{1, 2});
    // J = [[1, 0, 2z1], [0, 1, 2z2]]: minors 1, 2z2, -2z1 share no factor.
    CHECK(g.pluecker[0] == MPoly::constant(2, Rational(1)));
    CHECK(g.pluecker[1] == Rational(2) * zv(2, 1));
    CHECK(g.pluecker[2] == Rational(-2) * zv(2, 0));
    CHECK(g.removed_factor == MPoly::constant(2, Rational(1)));
    CHECK_FALSE(g.degenerate);
}

TEST_CASE("common jacobian factors are divided out and reported") {
    PolyImmersion f;
    f.m = 1;
    f.n = 2;
    f.components = {zv(1, 0).pow(2), zv(1, 0).pow(4)}; // J = (2z, 4z^3)
    const GaussRepresentation g = gauss_map(f);
    REQUIRE(g.pluecker.size() == 2);
    CHECK(g.removed_factor.total_degree() == 1); // the shared factor z
    const MPoly raw0 = Rational(2) * zv(1, 0);
    const MPoly raw1 = Rational(4) * zv(1, 0).pow(3);
    CHECK(g.pluecker[0] * g.removed_factor == raw0);
    CHECK(g.pluecker[1] * g.removed_factor == raw1);
    CHECK_FALSE(g.degenerate);
}

TEST_CASE("a linear curve has a constant (degenerate) gauss image") {
    PolyImmersion f;
    f.m = 1;
    f.n = 2;
    f.components = {zv(1, 0), Rational(3) * zv(1, 0)};
    const GaussRepresentation g = gauss_map(f);
    CHECK(g.degenerate);
}

TEST_CASE("constant maps are rejected as non-immersions") {
    PolyImmersion f;
    f.m = 1;
    f.n = 2;
    f.components = {MPoly::constant(1, Rational(5)), MPoly::constant(1, Rational(7))};
    try {
        gauss_map(f);
        FAIL("expected a degeneracy error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degeneracy);
    }
}

TEST_CASE("raw minors satisfy the pluecker relation for surfaces in C^4") {
    PolyImmersion f;
    f.m = 2;
    f.n = 4;
    f.components = {zv(2, 0), zv(2, 1), zv(2, 0) * zv(2, 1), zv(2, 0).pow(2) - zv(2, 1).pow(3)};
    const GaussRepresentation g = gauss_map(f);
    REQUIRE(g.pluecker.size() == 6); // binom(4,2), subsets 01,02,03,12,13,23
    const auto& p = g.pluecker;
    // p01 p23 - p02 p13 + p03 p12 = 0 (after removing the common factor the
    // relation still holds because it is homogeneous of degree two).
    const MPoly rel = p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
    CHECK(rel.is_zero());
}

TEST_CASE("gauss directions are invariant under affine reparametrization") {
    // Substituting an invertible affine change of source coordinates rescales
    // all minors by the same Jacobian determinant, so cross ratios of the
    // reduced representation match: p_i' * (p_j o phi) == p_j' * (p_i o phi).
    const PolyImmersion f = graph_surface();
    const GaussRepresentation g = gauss_map(f);

    // phi(w1, w2) = (2 w1 - w2 + 1, w1 + 3 w2 - 2).
    const std::vector<MPoly> phi = {
        Rational(2) * zv(2, 0) - zv(2, 1) + MPoly::constant(2, Rational(1)),
        zv(2, 0) + Rational(3) * zv(2, 1) - MPoly::constant(2, Rational(2))};

    PolyImmersion fp;
    fp.m = 2;
    fp.n = 3;
    for (const auto& c : f.components) fp.components.push_back(mpoly_substitute(c, phi));
    const GaussRepresentation gp = gauss_map(fp);

    for (std::size_t i = 0; i < g.pluecker.size(); ++i)
        for (std::size_t j = i + 1; j < g.pluecker.size(); ++j) {
            const MPoly lhs = gp.pluecker[i] * mpoly_substitute(g.pluecker[j], phi);
            const MPoly rhs = gp.pluecker[j] * mpoly_substitute(g.pluecker[i], phi);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("defect pipeline on the parabola curve") {
    PolyImmersion f;
    f.m = 1;
    f.n = 2;
    f.components = {zv(1, 0), zv(1, 0).pow(2)}; // Gauss curve (1 : 2z) in P^1
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"Q1", "Q2", "Q3"};
    fam.members = {testutil::linear_form({1, 0}), testutil::linear_form({0, 1}),
                   testutil::linear_form({1, 1})};
    const RGrid grid = RGrid::geometric(2.0, 8.0, 3, 1.0, 512);
    const GaussPipelineReport rep =
        gauss_defect_pipeline(f, fam, Rational(1), Rational(0), grid);

    CHECK(rep.gauss.N_amb == 1);
    CHECK(rep.params.p == Int(1));
    CHECK(rep.params.N == Int(18));
    CHECK(rep.params.u == Int(19));
    CHECK(rep.rhs == Rational(3));
    REQUIRE(rep.defects.size() == 3);
    // G~ = (1, 2z): Q1 never vanishes on it, Q2 and Q3 are met simply.
    for (const auto& row : rep.defects) {
        if (row.label == "Q1") CHECK(row.defect == 1.0);
        if (row.label == "Q2") CHECK(row.defect == 0.0);
        if (row.label == "Q3") CHECK(row.defect == 0.0);
    }
    CHECK(rep.defect_sum == 1.0);
    CHECK(rep.holds);
    CHECK(rep.position_checked);
    CHECK(rep.display_bound_holds);
    CHECK(rep.display_bound > Int(0));
}

TEST_CASE("pipeline rejects higher-dimensional sources") {
    HypersurfaceFamily fam;
    fam.n = 2;
    fam.k = 2;
    fam.labels = {"Q"};
    fam.members = {HomPoly::variable(2, 0)};
    const RGrid grid = RGrid::geometric(2.0, 8.0, 2, 1.0, 256);
    CHECK_THROWS_AS(gauss_defect_pipeline(graph_surface(), fam, Rational(1), Rational(0), grid),
                    Error);
}
