#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exch/errors.hpp"
#include "exch/rational.hpp"

using namespace exch;

TEST_CASE("parse and serialize round-trip, canonical form") {
    CHECK(rational_str(parse_rational("2/6")) == "1/3");
    CHECK(rational_str(parse_rational("-4/6")) == "-2/3");
    CHECK(rational_str(parse_rational("7")) == "7");
    CHECK(rational_str(parse_rational("0/5")) == "0");
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(denominator(parse_rational("3/-6")) > 0);
}

TEST_CASE("parse rejects junk") {
    CHECK_THROWS_AS(parse_rational(""), validation_error);
    CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
    CHECK_THROWS_AS(parse_rational("a/b"), validation_error);
    CHECK_THROWS_AS(parse_rational("1.5"), validation_error);
    CHECK_THROWS_AS(parse_rational("1 / 2"), validation_error);
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), validation_error);
}

TEST_CASE("arithmetic stays exact") {
    Rational third(1, 3);
    CHECK(third + third + third == 1);
    CHECK(rational_double(Rational(1, 2)) == 0.5);
}
