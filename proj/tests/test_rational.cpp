#include <doctest.h>

#include "defectlab/error.hpp"
#include "defectlab/rational.hpp"

using namespace defectlab;

TEST_CASE("rational parse accepts integers, fractions, exact decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("-2.50") == Rational(-5, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("0") == Rational(0));
}

TEST_CASE("rational canonical form and string round trip") {
    const Rational r(6, -8);
    CHECK(r.numerator() == Int(-3));
    CHECK(r.denominator() == Int(4));
    CHECK(r.str() == "-3/4");
    CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("rational arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(a < Rational(1, 2));
    CHECK(Rational(2, 4).is_integer() == false);
    CHECK(Rational(8, 4).is_integer());
    CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("integer helpers match closed forms") {
    CHECK(binomial(7ul, 3ul) == Int(35));
    CHECK(binomial(Int(10), 4ul) == Int(210));
    CHECK(factorial(6ul) == Int(720));
    CHECK(int_pow(Int(3), 4ul) == Int(81));
    CHECK(int_lcm(Int(6), Int(8)) == Int(24));
    CHECK(int_gcd(Int(12), Int(18)) == Int(6));
    CHECK(int_fdiv(Int(-7), Int(2)) == Int(-4));
    CHECK(int_fdiv(Int(7), Int(2)) == Int(3));
    CHECK(rat_pow(Rational(2, 3), 3ul) == Rational(8, 27));
    CHECK(rat_pow(Rational(5), 0ul) == Rational(1));
}

TEST_CASE("gauss rational field operations") {
    const GaussRational i(Rational(0), Rational(1));
    CHECK(i * i == GaussRational(Rational(-1)));
    const GaussRational z(Rational(3), Rational(4));
    CHECK(z.norm() == Rational(25));
    CHECK(z.conj() == GaussRational(Rational(3), Rational(-4)));
    CHECK(z / z == GaussRational(1));
    CHECK((z * z.conj()).is_real());
    CHECK_THROWS_AS(z / GaussRational(0), Error);
}

TEST_CASE("gauss rational parse") {
    CHECK(GaussRational::parse("5") == GaussRational(Rational(5)));
    CHECK(GaussRational::parse("2+3i") == GaussRational(Rational(2), Rational(3)));
    CHECK(GaussRational::parse("2-3i") == GaussRational(Rational(2), Rational(-3)));
    CHECK(GaussRational::parse("1/2+1/3i") == GaussRational(Rational(1, 2), Rational(1, 3)));
    const GaussRational w(Rational(-7, 2), Rational(5, 4));
    CHECK(GaussRational::parse(w.str()) == w);
}
