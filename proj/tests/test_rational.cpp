#include <lelek/rational.hpp>

#include <catch2/catch_amalgamated.hpp>

using lelek::Rational;

TEST_CASE("rational parsing and reduction") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays exact") {
    Rational x(1, 3);
    Rational y = x + x + x;
    CHECK(y == Rational(1));
    CHECK((Rational(5, 6) * Rational(3)).str() == "5/2");
    CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("decimal rendering is deterministic and truncating") {
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(1, 2).decimal(4) == "0.5000");
    CHECK(Rational(-1, 8).decimal(3) == "-0.125");
    CHECK(Rational(7).decimal(2) == "7.00");
}

TEST_CASE("pow helpers") {
    CHECK(lelek::pow2(3) == Rational(8));
    CHECK(lelek::pow2(-3) == Rational(1, 8));
    CHECK(lelek::pow_nonneg(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("smallest N with 1/2^N below eps") {
    CHECK(lelek::ceil_log2_inverse(Rational(1, 2)) == 2);   // 1/4 < 1/2, 1/2 is not
    CHECK(lelek::ceil_log2_inverse(Rational(1, 4)) == 3);
    CHECK(lelek::ceil_log2_inverse(Rational(3, 4)) == 1);
    CHECK(lelek::ceil_log2_inverse(Rational(2)) == 0);
}
