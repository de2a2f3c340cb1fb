#include <doctest.h>

#include <cmath>

#include "defectlab/nevanlinna.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::linear_form;
using testutil::qp;

namespace {

// f~ = (1, z) in P^1.
MeromorphicCurve line_curve() {
    MeromorphicCurve f;
    f.n = 1;
    f.components = {widen(qp({1})), widen(qp({0, 1}))};
    return f;
}

HypersurfaceFamily line_family() {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"Q1", "Q2", "Q3"};
    fam.members = {linear_form({1, 0}), linear_form({0, 1}), linear_form({1, 1})};
    return fam;
}

} // namespace

TEST_CASE("radius grids validate and enumerate geometrically") {
    const RGrid grid = RGrid::geometric(2.0, 16.0, 4);
    REQUIRE(grid.radii.size() == 4);
    CHECK(grid.radii.front() == doctest::Approx(2.0));
    CHECK(grid.radii.back() == doctest::Approx(16.0));
    CHECK(grid.radii[1] / grid.radii[0] == doctest::Approx(grid.radii[2] / grid.radii[1]));
    CHECK(grid.r0 == 1.0);
    CHECK_THROWS_AS(RGrid::geometric(16.0, 2.0, 4), Error);
    CHECK_THROWS_AS(RGrid::geometric(2.0, 16.0, 0), Error);
}

TEST_CASE("characteristic of the rational normal curves has a closed form") {
    const RGrid grid = RGrid::geometric(2.0, 32.0, 5);
    SUBCASE("degree one") {
        // ||f~|| = sqrt(1 + r^2) is constant on circles: T is exact.
        const auto T = characteristic(line_curve(), grid);
        for (std::size_t i = 0; i < grid.radii.size(); ++i) {
            const double r = grid.radii[i];
            CHECK(T[i] == doctest::Approx(0.5 * std::log((1 + r * r) / 2.0)).epsilon(1e-9));
        }
    }
    SUBCASE("degree two") {
        MeromorphicCurve f;
        f.n = 1;
        f.components = {widen(qp({1})), widen(qp({0, 0, 1}))};
        const auto T = characteristic(f, grid);
        for (std::size_t i = 0; i < grid.radii.size(); ++i) {
            const double r = grid.radii[i];
            const double r4 = r * r * r * r;
            CHECK(T[i] == doctest::Approx(0.5 * std::log((1 + r4) / 2.0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("counting functions integrate root multiplicities exactly") {
    const RGrid grid = RGrid::geometric(8.0, 32.0, 3);
    const MeromorphicCurve f = line_curve();
    SUBCASE("root at the origin, inside r0") {
        const auto N = counting(f, linear_form({0, 1}), grid);
        for (std::size_t i = 0; i < grid.radii.size(); ++i)
            CHECK(N[i] == doctest::Approx(std::log(grid.radii[i])).epsilon(1e-12));
    }
    SUBCASE("root at -4 enters at r = 4") {
        const auto N = counting(f, linear_form({4, 1}), grid); // 4 x0 + x1 at z = -4
        for (std::size_t i = 0; i < grid.radii.size(); ++i)
            CHECK(N[i] == doctest::Approx(std::log(grid.radii[i] / 4.0)).epsilon(1e-12));
    }
    SUBCASE("truncation caps the multiplicity") {
        const HomPoly Q = HomPoly::monomial(1, {0, 2}, Rational(1)); // x1^2
        const auto full = counting(f, Q, grid);
        const auto trunc = counting(f, Q, grid, Int(1));
        for (std::size_t i = 0; i < grid.radii.size(); ++i) {
            CHECK(full[i] == doctest::Approx(2.0 * std::log(grid.radii[i])).epsilon(1e-12));
            CHECK(trunc[i] == doctest::Approx(std::log(grid.radii[i])).epsilon(1e-12));
        }
    }
}

TEST_CASE("proximity of the line curve against x1") {
    const RGrid grid = RGrid::geometric(2.0, 16.0, 4);
    const auto m = proximity(line_curve(), linear_form({0, 1}), grid, 0);
    for (std::size_t i = 0; i < grid.radii.size(); ++i) {
        const double r = grid.radii[i];
        CHECK(m[i] == doctest::Approx(0.5 * std::log(1 + r * r) - std::log(r)).epsilon(1e-9));
    }
}

TEST_CASE("first main theorem residual is flat") {
    const RGrid grid = RGrid::geometric(2.0, 64.0, 8);
    const FmtReport rep = fmt_report(line_curve(), linear_form({0, 1}), grid);
    CHECK(rep.d == 1);
    CHECK(rep.residual_variation <= 1e-5);
    for (std::size_t i = 0; i < rep.r.size(); ++i)
        CHECK(rep.residual[i] == doctest::Approx(-0.5 * std::log(2.0)).epsilon(1e-6));
}

TEST_CASE("defects of the line curve") {
    const RGrid grid = RGrid::geometric(2.0, 64.0, 6);
    const MeromorphicCurve f = line_curve();
    SUBCASE("met hypersurface has defect zero") {
        CHECK(fmt_report(f, linear_form({0, 1}), grid).defect == 0.0);
        CHECK(fmt_report(f, linear_form({1, 1}), grid).defect == 0.0);
    }
    SUBCASE("omitted hypersurface has defect one") {
        CHECK(fmt_report(f, linear_form({1, 0}), grid).defect == 1.0);
    }
    SUBCASE("truncation raises the defect of a double contact") {
        const HomPoly Q = HomPoly::monomial(1, {0, 2}, Rational(1)); // x1^2, d = 2
        const FmtReport rep = fmt_report(f, Q, grid, Int(1));
        CHECK(rep.defect == 0.5); // 1 - min(2,1)/(2*1)
        CHECK(rep.truncation_level == Int(1));
        const FmtReport full = fmt_report(f, Q, grid);
        CHECK(full.defect == 0.0);
    }
    SUBCASE("defect sandwich") {
        const FmtReport rep = fmt_report(f, linear_form({-3, 2}), grid);
        CHECK(rep.defect >= -1e-3);
        CHECK(rep.defect <= 1.0 + 1e-3);
    }
}

TEST_CASE("invalid truncation level is rejected") {
    const RGrid grid = RGrid::geometric(2.0, 8.0, 2);
    CHECK_THROWS_AS(fmt_report(line_curve(), linear_form({0, 1}), grid, Int(0)), Error);
}

TEST_CASE("weighted veronese embedding reproduces d times the characteristic") {
    const MeromorphicCurve f = line_curve();
    const RGrid grid = RGrid::geometric(2.0, 16.0, 4);
    // Basis (x0^2, x0 x1, x1^2) with weights (1, sqrt 2, 1) makes
    // ||F~||^2 = (1 + |z|^2)^2 exactly.
    const std::vector<HomPoly> L = {HomPoly::monomial(1, {2, 0}, Rational(1)),
                                    HomPoly::monomial(1, {1, 1}, Rational(1)),
                                    HomPoly::monomial(1, {0, 2}, Rational(1))};
    const VeroneseReport rep = veronese_check(f, L, grid, {1.0, std::sqrt(2.0), 1.0});
    CHECK(rep.d == 2);
    CHECK(rep.u == 3);
    CHECK(rep.variation <= 1e-5);
    for (const double v : rep.diff) CHECK(std::abs(v) <= 1e-9);
}

TEST_CASE("smt margins for the pinned line scenario") {
    const MeromorphicCurve f = line_curve();
    const HypersurfaceFamily fam = line_family();
    const RGrid grid = RGrid::geometric(2.0, 8.0, 3, 1.0, 512);
    const SmtReport rep = smt_margin(f, fam, Rational(1, 2), 4, grid, 0, 500, 2.0);
    CHECK(rep.b == 10);
    CHECK(rep.u == 5);
    CHECK(rep.p == 1);
    CHECK(rep.p_le_b);
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.coefficient_exact == Rational(1)); // q - p u N / (d b) = 3 - 2
    REQUIRE(rep.margin.size() == 3);
    CHECK(rep.margin.back() > 0.0);
    CHECK(rep.margin[1] >= rep.margin[0] - 1e-9);
    CHECK(rep.margin[2] >= rep.margin[1] - 1e-9);
}

TEST_CASE("smt rejects an auxiliary degree at or below n d") {
    const RGrid grid = RGrid::geometric(2.0, 8.0, 2, 1.0, 256);
    CHECK_THROWS_AS(smt_margin(line_curve(), line_family(), Rational(1), 1, grid, 0, 100, 2.0),
                    Error);
}

TEST_CASE("divisor truncation check on the hand-worked cubic") {
    // f~ = (1, z^3) against {x0, x1, x0 + x1} with N = 2: the monomial basis
    // of V_2 pulled back is (1, z^3, z^6) and W = 54 z^6.
    MeromorphicCurve f;
    f.n = 1;
    f.components = {widen(qp({1})), widen(qp({0, 0, 0, 1}))};
    const DivisorCheckReport rep = divisor_truncation_check(f, line_family(), 2, 3);
    CHECK(rep.pass);
    CHECK(rep.u == 3);
    CHECK(rep.b == 3);
    CHECK(rep.p == 1);
    bool saw_z = false, saw_unit = false;
    for (const auto& row : rep.rows) {
        CHECK(row.ok);
        CHECK(row.lhs <= row.rhs);
        if (row.nu_W == 6) {
            // The factor z: nu_Q = (3, 0, 0) so lhs = 3*3 - 6 = 3, and the
            // truncated bound is 3*min(2,3) = 6.
            saw_z = true;
            CHECK(row.factor_degree == 1);
            CHECK(row.lhs == 3);
            CHECK(row.rhs == 6);
        }
        if (row.nu_W == 0 && row.factor_degree == 1) {
            // The factor 1 + z^3 splits into three linear factors each with
            // nu_Q = 1 against Q3 only: lhs = 3*1 - 0 = 3 = rhs.
            saw_unit = true;
            CHECK(row.lhs == 3);
            CHECK(row.rhs == 3);
        }
    }
    CHECK(saw_z);
}

TEST_CASE("degenerate inputs carry distinct error kinds") {
    const RGrid grid = RGrid::geometric(2.0, 8.0, 2);
    SUBCASE("constant curves have no defect theory") {
        MeromorphicCurve c;
        c.n = 1;
        c.components = {widen(qp({2})), widen(qp({1}))};
        try {
            fmt_report(c, linear_form({0, 1}), grid);
            FAIL("expected an undefined-defect error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::UndefinedDefect);
        }
    }
    SUBCASE("a curve inside the hypersurface has no proximity function") {
        try {
            proximity(line_curve(), linear_form({0, 0}), grid); // the zero form
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidInput);
        }
        // f~ = (1, 0) lies in V(x1).
        MeromorphicCurve g;
        g.n = 1;
        g.components = {widen(qp({1})), GPoly()};
        CHECK_NOTHROW(g.validate());
        try {
            proximity(g, linear_form({0, 1}), grid);
            FAIL("expected a degeneracy error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Degeneracy);
        }
    }
}
