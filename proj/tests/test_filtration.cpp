#include <doctest.h>

#include "defectlab/filtration.hpp"

#include "helpers.hpp"

using namespace defectlab;

TEST_CASE("tuple order enumerates ascending lexicographic chains") {
    const TupleOrder order(2, 1);
    REQUIRE(order.K() == 3);
    CHECK(order.at(1) == MultiIndex{0, 0});
    CHECK(order.at(2) == MultiIndex{0, 1});
    CHECK(order.at(3) == MultiIndex{1, 0});
    CHECK(order.n() == 2);
    CHECK(order.cap() == 1);
}

TEST_CASE("frozen filtration: P = x0 x1 in the line, N = 8") {
    // V_8 has dimension 9; W_(s) = P^s V_{8-2s} gives dims 9,7,5,3,1 and
    // jumps m_s = 2,2,2,2 with the final block of size 1.
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1));
    const FiltrationTable table = build_filtration({P}, 8, true);
    CHECK(table.n == 1);
    CHECK(table.d == 2);
    CHECK(table.N == 8);
    CHECK(table.u == 9);
    CHECK(table.tuples.K() == 5);
    CHECK(table.dims == std::vector<std::size_t>{9, 7, 5, 3, 1});
    CHECK(table.jumps == std::vector<long long>{2, 2, 2, 2, 1});
    REQUIRE(table.weights.size() == 1);
    CHECK(table.weights[0] == 16); // sum_s m_s * i_s = 0+2+4+6+4
    CHECK(table.locus_certified);
    CHECK(table.locus_dimension == 0);
    CHECK(table.basis.size() == 9);
}

TEST_CASE("adapted basis witnesses factor as claimed") {
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1));
    const FiltrationTable table = build_filtration({P}, 8, true);
    for (const auto& e : table.basis) {
        const MultiIndex& tuple = table.tuples.at(e.s);
        HomPoly product = e.h;
        for (std::size_t j = 0; j < tuple.size(); ++j)
            if (tuple[j] > 0)
                product = product * table.P[j].pow(static_cast<unsigned>(tuple[j]));
        CHECK(product == e.psi);
    }
}

TEST_CASE("jump law: m_s = d^n for qualifying tuples") {
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1));
    const FiltrationTable table = build_filtration({P}, 8, true);
    const CzReport cz = verify_cz(table);
    CHECK(cz.pass);
    CHECK(cz.expected == 2); // d^n = 2
    // Qualifying tuples are those with d * sigma(i) < N - n d = 6.
    for (const auto& row : cz.rows)
        CHECK(row.qualifies == (2 * mi_degree(row.tuple) < 6));
}

TEST_CASE("jump law in the plane with two coordinate lines") {
    const FiltrationTable table =
        build_filtration({HomPoly::variable(2, 0), HomPoly::variable(2, 1)}, 3, true);
    CHECK(table.u == 10); // binom(3+2, 2)
    const CzReport cz = verify_cz(table);
    CHECK(cz.pass);
    CHECK(cz.expected == 1); // d^n = 1
    bool saw_qualifying = false;
    for (const auto& row : cz.rows) {
        if (row.qualifies) {
            saw_qualifying = true;
            CHECK(row.m == 1);
            CHECK(row.ok);
        }
    }
    CHECK(saw_qualifying);
}

TEST_CASE("weight summary takes the minimum over tables and coordinates") {
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1));
    const FiltrationTable t8 = build_filtration({P}, 8, true);
    const FiltrationTable t6 = build_filtration({P}, 6, true);
    const WeightSummary ws = weight_summary({t8, t6});
    CHECK(ws.per_table.size() == 2);
    CHECK(ws.per_table[0][0] == 16);
    CHECK(ws.b == std::min(ws.per_table[0][0], ws.per_table[1][0]));
}

TEST_CASE("improper intersections are rejected when certification is on") {
    // Two proportional lines in the plane cut out a positive-dimensional set.
    CHECK_THROWS_AS(build_filtration({HomPoly::variable(2, 0), HomPoly::variable(2, 0)}, 4, true),
                    Error);
}

TEST_CASE("input validation") {
    const HomPoly P = HomPoly::monomial(1, {1, 1}, Rational(1));
    CHECK_THROWS_AS(build_filtration({P}, 7, true), Error);  // N not a multiple of d
    CHECK_THROWS_AS(build_filtration({P, P}, 8, true), Error); // wrong count for P^1
    CHECK_THROWS_AS(build_filtration({}, 8, true), Error);
}
