#include <doctest.h>

#include <cmath>

#include "defectlab/position.hpp"

#include "helpers.hpp"

using namespace defectlab;
using testutil::linear_form;

namespace {

HypersurfaceFamily line_family() {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"Q1", "Q2", "Q3"};
    fam.members = {linear_form({1, 0}), linear_form({0, 1}), linear_form({1, 1})};
    return fam;
}

} // namespace

TEST_CASE("family validation") {
    HypersurfaceFamily fam = line_family();
    CHECK_NOTHROW(fam.validate());
    fam.labels.pop_back();
    CHECK_THROWS_AS(fam.validate(), Error);
}

TEST_CASE("degree normalization powers members to the lcm") {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"L", "C"};
    fam.members = {linear_form({1, 0}), HomPoly::monomial(1, {0, 2}, Rational(1))};
    const auto [norm, d] = normalize_degrees(fam);
    CHECK(d == 2);
    CHECK(norm.members[0] == linear_form({1, 0}).pow(2));
    CHECK(norm.members[1] == fam.members[1]);
    CHECK(norm.labels == fam.labels);
}

TEST_CASE("three distinct lines in the projective line are in general position") {
    const PositionCheck pc = check_subgeneral(line_family(), 1);
    CHECK(pc.holds);
    CHECK(pc.violating.empty());
}

TEST_CASE("a repeated hypersurface violates position") {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"A", "B"};
    fam.members = {linear_form({1, 0}), Rational(2) * linear_form({1, 0})};
    const PositionCheck pc = check_subgeneral(fam, 1);
    CHECK_FALSE(pc.holds);
    CHECK(pc.violating == std::vector<std::string>{"A", "B"});
}

TEST_CASE("subgeneral but not general position in the plane") {
    // Four lines through general points plus one concurrence: {x0, x1, x0+x1}
    // all pass through (0:0:1), so k = 2 fails, but k = 3 holds when no four
    // share a point.
    HypersurfaceFamily fam;
    fam.n = 2;
    fam.k = 3;
    fam.labels = {"A", "B", "C", "D"};
    fam.members = {linear_form({1, 0, 0}), linear_form({0, 1, 0}), linear_form({1, 1, 0}),
                   linear_form({0, 0, 1})};
    CHECK_FALSE(check_subgeneral(fam, 2).holds);
    CHECK(check_subgeneral(fam, 3).holds);
}

TEST_CASE("replacement produces a regular-sequence prefix from a subset") {
    const HypersurfaceFamily fam = line_family();
    HypersurfaceFamily wide = fam;
    wide.k = 2; // treat as 2-subgeneral: every 3-subset must avoid a common zero
    CHECK(check_subgeneral(wide, 2).holds);

    const ReplacementResult rr = replace_hypersurfaces(wide, {"Q1", "Q2", "Q3"}, 5);
    REQUIRE(rr.outputs.size() == 2); // n + 1 outputs
    CHECK(rr.source_labels.size() == 3);

    // P_1 is the first selected source member.
    bool p1_is_member = false;
    for (const auto& q : wide.members) p1_is_member = p1_is_member || rr.outputs[0] == q;
    CHECK(p1_is_member);

    // P_2 reconstructs from the recorded combination over Q_{i_2}, Q_{i_3}.
    REQUIRE(rr.combination.size() == 1);
    REQUIRE(rr.combination[0].size() == 2);
    auto member_by_label = [&](const std::string& lab) {
        for (std::size_t i = 0; i < wide.labels.size(); ++i)
            if (wide.labels[i] == lab) return wide.members[i];
        FAIL("unknown label");
        return wide.members[0];
    };
    HomPoly rebuilt(wide.n, 1);
    for (std::size_t j = 0; j < 2; ++j)
        rebuilt += rr.combination[0][j] * member_by_label(rr.source_labels[j + 1]);
    CHECK(rebuilt == rr.outputs[1]);

    // Certified prefix dimensions: dim after t members is <= n - t.
    REQUIRE(rr.prefix_dimension.size() == 2);
    CHECK(rr.prefix_dimension[0] <= 0);
    CHECK(rr.prefix_dimension[1] == -1); // empty at the end
    CHECK(rr.seed == 5);
}

TEST_CASE("replacement rejects a wrong subset size") {
    HypersurfaceFamily wide = line_family();
    wide.k = 2;
    CHECK_THROWS_AS(replace_hypersurfaces(wide, {"Q1", "Q2"}, 0), Error);
}

TEST_CASE("position constants for the coordinate pair on the line") {
    HypersurfaceFamily fam;
    fam.n = 1;
    fam.k = 1;
    fam.labels = {"Q1", "Q2"};
    fam.members = {linear_form({1, 0}), linear_form({0, 1})};
    const PositionConstants pc = position_constants(fam, 4000, 3);
    // h(x) = max_j |Q_j(x)| / ||x|| has infimum 1/sqrt(2) (at |x0| = |x1|)
    // and supremum 1 (at the coordinate points, sampled deterministically).
    CHECK(pc.alpha == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.02));
    CHECK(pc.beta == doctest::Approx(1.0).epsilon(0.02));
    CHECK(pc.samples == 4000);
}
