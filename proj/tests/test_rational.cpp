#include "zetareg/errors.hpp"
#include "zetareg/rational.hpp"

#include <doctest.h>

#include <random>

using zetareg::Error;
using zetareg::ErrorCode;
using zetareg::exact::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(42).str() == "42");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("parse accepts canonical text and rejects junk") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK(Rational::parse("4/6") == Rational(2, 3));

    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    try {
        Rational::parse("1/0");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::division_by_zero);
    }
}

TEST_CASE("decimal literals are exact") {
    CHECK(Rational::from_decimal("3", "5", false) == Rational(7, 2));
    CHECK(Rational::from_decimal("0", "25", true) == Rational(-1, 4));
    CHECK(Rational::from_decimal("3", "0", false) == Rational(3));
    CHECK(Rational::from_decimal("3", "0", false).is_integer());
    CHECK(Rational::from_decimal("0", "001", false) == Rational(1, 1000));
    CHECK_FALSE(Rational::from_decimal("2", "75", false).is_integer());
}

TEST_CASE("field laws on random values") {
    std::mt19937 gen(321u);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 300; ++i) {
        Rational a(num(gen), den(gen));
        Rational b(num(gen), den(gen));
        Rational c(num(gen), den(gen));
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(Rational::parse(a.str()) == a);
    }
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
    CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
    CHECK_THROWS_AS(Rational(0).pow(-1), Error);
}

TEST_CASE("ordering and sign predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(-5).is_negative());
    CHECK_FALSE(Rational(0).is_negative());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
}

TEST_CASE("long and double conversions") {
    CHECK(Rational(41).fits_long());
    CHECK(Rational(41).to_long() == 41);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    // 2^100 is an integer but does not fit a long
    Rational big = Rational(2).pow(100);
    CHECK(big.is_integer());
    CHECK_FALSE(big.fits_long());
}

TEST_CASE("division by zero is reported with its code") {
    try {
        (void)(Rational(1) / Rational(0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::division_by_zero);
    }
}

TEST_CASE("factorials") {
    CHECK(zetareg::exact::factorial(0) == Rational(1));
    CHECK(zetareg::exact::factorial(5) == Rational(120));
    CHECK(zetareg::exact::factorial(20) == Rational::parse("2432902008176640000"));
}
