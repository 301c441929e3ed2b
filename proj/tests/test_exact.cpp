#include "zetareg/errors.hpp"
#include "zetareg/exact.hpp"

#include "oracles.hpp"

#include <doctest.h>

using zetareg::Error;
using zetareg::ErrorCode;
using zetareg::exact::Rational;
namespace exact = zetareg::exact;

TEST_CASE("binomial coefficients") {
    CHECK(exact::binomial_exact(0, 0) == Rational(1));
    CHECK(exact::binomial_exact(10, 5) == Rational(252));
    CHECK(exact::binomial_exact(52, 26) == Rational::parse("495918532948104"));
    // out-of-range lower index contributes nothing to summations
    CHECK(exact::binomial_exact(5, -1) == Rational(0));
    CHECK(exact::binomial_exact(5, 6) == Rational(0));
    // Pascal rule
    for (unsigned long m = 1; m <= 20; ++m)
        for (long l = 0; l <= long(m); ++l)
            CHECK(exact::binomial_exact(m, l) ==
                  exact::binomial_exact(m - 1, l - 1) + exact::binomial_exact(m - 1, l));
}

TEST_CASE("bernoulli numbers match the Akiyama-Tanigawa oracle") {
    // the two conventions differ only at index 1
    CHECK(exact::bernoulli(1) == Rational(-1, 2));
    CHECK(oracle::bernoulli_plus(1) == Rational(1, 2));
    for (std::size_t n = 0; n <= 60; ++n) {
        if (n == 1) continue;
        CHECK(exact::bernoulli(n) == oracle::bernoulli_plus(n));
    }
}

TEST_CASE("bernoulli frozen values") {
    CHECK(exact::bernoulli(0) == Rational(1));
    CHECK(exact::bernoulli(2) == Rational(1, 6));
    CHECK(exact::bernoulli(12) == Rational::parse("-691/2730"));
    CHECK(exact::bernoulli(26) == Rational::parse("8553103/6"));
    CHECK(exact::bernoulli(50) == Rational::parse("495057205241079648212477525/66"));
    CHECK(exact::bernoulli(60) ==
          Rational::parse("-1215233140483755572040304994079820246041491/56786730"));
    for (std::size_t n = 3; n <= 59; n += 2) CHECK(exact::bernoulli(n).is_zero());
}

TEST_CASE("bernoulli index cap") {
    CHECK(exact::kMaxBernoulliIndex == 512);
    try {
        exact::bernoulli(exact::kMaxBernoulliIndex + 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::argument_too_large);
    }
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(exact::zeta_neg_int(0) == Rational(-1, 2));
    CHECK(exact::zeta_neg_int(1) == Rational(-1, 12));
    CHECK(exact::zeta_neg_int(3) == Rational(1, 120));
    CHECK(exact::zeta_neg_int(11) == Rational(691, 32760));
    CHECK(exact::zeta_neg_int(25) == Rational(-8553103, 156));
    for (std::size_t k = 2; k <= 40; k += 2) CHECK(exact::zeta_neg_int(k).is_zero());
    // definitional consistency with the Bernoulli table
    for (std::size_t k = 0; k <= 30; ++k) {
        Rational want = exact::bernoulli(k + 1) / Rational(long(k) + 1);
        if (k % 2 == 1) want = -want;
        CHECK(exact::zeta_neg_int(k) == want);
    }
}

TEST_CASE("binomial-weighted bernoulli sums collapse to -1") {
    for (std::size_t r = 0; r <= 50; ++r)
        CHECK(exact::bernoulli_binomial_sum(r) == Rational(-1));
}
