#include <doctest.h>

#include "defectlab/bounds.hpp"

using namespace defectlab;

TEST_CASE("strict ceiling: least integer strictly greater") {
    CHECK(strict_ceiling(Rational(1)) == Int(2));
    CHECK(strict_ceiling(Rational(1, 2)) == Int(1));
    CHECK(strict_ceiling(Rational(-1, 2)) == Int(0));
    CHECK(strict_ceiling(Rational(0)) == Int(1));
    CHECK(strict_ceiling(Rational(-3)) == Int(-2));
    CHECK(strict_ceiling(Rational(7, 3)) == Int(3));
}

TEST_CASE("parameter set for n=2, k=2, d=1, eps=1") {
    const ParameterSet ps = theorem_parameters(2, 2, 1, Rational(1), Rational(0));
    CHECK(ps.p == Int(1));
    CHECK(ps.I_eps == Int(2));
    CHECK(ps.N == Int(57));      // 3 + 1*27*2*1
    CHECK(ps.u == Int(1711));    // binom(59, 2)
    CHECK(ps.rhs_base == Rational(4));
    CHECK(ps.rhs_full == Rational(4)); // rho = 0
    CHECK(ps.corollary_rhs == Rational(4));
}

TEST_CASE("parameter set for n=1, k=1, d=1, eps=1") {
    const ParameterSet ps = theorem_parameters(1, 1, 1, Rational(1), Rational(0));
    CHECK(ps.p == Int(1));
    CHECK(ps.I_eps == Int(2));
    CHECK(ps.N == Int(18)); // 2 + 8*2
    CHECK(ps.u == Int(19));
    CHECK(ps.rhs_base == Rational(3));
}

TEST_CASE("parameter set for n=1, k=2, d=2, eps=1/2") {
    const ParameterSet ps = theorem_parameters(1, 2, 2, Rational(1, 2), Rational(0));
    CHECK(ps.p == Int(2));
    CHECK(ps.I_eps == Int(3)); // strictly greater than 2
    CHECK(ps.N == Int(100));   // 4 + 2*8*3*2
    CHECK(ps.u == Int(101));
    CHECK(ps.rhs_base == Rational(9, 2));
}

TEST_CASE("rho contributes the u(u-1)/d correction") {
    const ParameterSet ps = theorem_parameters(1, 1, 1, Rational(1), Rational(1, 100));
    CHECK(ps.rhs_full == Rational(3) + Rational(19 * 18, 100));
}

TEST_CASE("filtration weight lower bound formula") {
    CHECK(b_lower_bound(1, 1, Int(18)) == Rational(153)); // N(N+1)/2 for n=1, d=1
    CHECK(b_lower_bound(1, 2, Int(8)) == Rational(12));
    CHECK(b_lower_bound(2, 1, Int(4)) == Rational(4));
}

TEST_CASE("parameter lemma holds at the pinned parameter points") {
    for (const auto& [n, k, d] : {std::tuple{1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {3, 4, 2}}) {
        const ParameterSet ps = theorem_parameters(n, k, d, Rational(1), Rational(0));
        const LemmaNewReport rep = verify_lemma_new(ps);
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(d);
        CHECK(rep.a_pass);
        CHECK(rep.b_pass);
        CHECK(rep.roundings_agree);
        CHECK(rep.lhs_a <= rep.bound_a);
        CHECK(Rational(ps.u) <= rep.rhs_b_hi);
    }
}

TEST_CASE("part (a) with the formula weight at n=1, k=1, d=1") {
    const ParameterSet ps = theorem_parameters(1, 1, 1, Rational(1), Rational(0));
    const LemmaNewReport rep = verify_lemma_new(ps);
    CHECK(rep.b == Rational(153));
    CHECK(rep.lhs_a == Rational(19 * 18, 153)); // puN/(db) = 38/17
    CHECK(rep.bound_a == Rational(3));
}

TEST_CASE("a supplied weight below the formula bound can break part (a)") {
    const ParameterSet ps = theorem_parameters(1, 1, 1, Rational(1), Rational(0));
    const LemmaNewReport rep = verify_lemma_new(ps, Rational(1));
    CHECK(rep.lhs_a == Rational(342));
    CHECK_FALSE(rep.a_pass);
}

TEST_CASE("rational sandwich of e is tight and ordered") {
    CHECK(e_lower() < e_upper());
    CHECK(e_upper() - e_lower() < Rational(Int(1), Int(1000000000000L)));
    CHECK(e_lower() > Rational(Int(2718281828L), Int(1000000000L)));
    CHECK(e_upper() < Rational(Int(2718281829L), Int(1000000000L)));
}

TEST_CASE("comparison display values at n=2, k=2, d=1, eps=1") {
    const ComparisonDisplay cmp = comparison_parameters(2, 2, 1, Rational(1));
    CHECK(cmp.N == Int(288)); // 2 k d n^2 (n+1)^2 I
    // (3 e k d I)^n (n+1)^{3n} with e rounded up.
    CHECK(cmp.u_bound > Rational(700000));
    CHECK(cmp.u_bound < Rational(800000));
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(theorem_parameters(0, 1, 1, Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(theorem_parameters(2, 1, 1, Rational(1), Rational(0)), Error); // k < n
    CHECK_THROWS_AS(theorem_parameters(1, 1, 0, Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(theorem_parameters(1, 1, 1, Rational(0), Rational(0)), Error); // eps > 0
    CHECK_THROWS_AS(theorem_parameters(1, 1, 1, Rational(1), Rational(-1)), Error);
}
