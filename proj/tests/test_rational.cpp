#include <doctest.h>

#include "ramseylab/rational.hpp"

using namespace ramseylab;

TEST_CASE("rational arithmetic and ordering") {
    Rational a = Rational::of(5, 2);
    Rational b = Rational::of(-10, -4);
    CHECK(a == b);
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(-3, 6).str() == "-1/2");
    CHECK((Rational::of(1, 3) + Rational::of(1, 6)) == Rational::of(1, 2));
    CHECK((Rational::of(5, 2) * Rational(2)) == Rational(5));
    CHECK((Rational(1) / Rational::of(5, 2)) == Rational::of(2, 5));
    CHECK(Rational::of(1, 3) < Rational::of(1, 2));
    CHECK(Rational::of(-1, 2) < Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational ceiling") {
    CHECK(Rational::of(10, 1).ceil() == 10);
    CHECK(Rational::of(5, 2).ceil() == 3);
    CHECK(Rational::of(-5, 2).ceil() == -2);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5/2") == Rational::of(5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0.05") == Rational::of(1, 20));
    CHECK(Rational::parse("0.5") == Rational::of(1, 2));
    CHECK(Rational::parse("1.25") == Rational::of(5, 4));
    CHECK_THROWS(Rational::parse(""));
}
