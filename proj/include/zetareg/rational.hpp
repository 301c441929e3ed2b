#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>

namespace zetareg::exact {

// Arbitrary-precision rational in canonical form: denominator > 0 and
// gcd(|num|, den) = 1 after every operation.  Arithmetic is exact; nothing in
// this class rounds.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(long num, long den);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Text form "p/q" ("p" when q = 1), optional leading '-'.
    static Rational parse(const std::string& text);
    // Exact value of a decimal literal: int_part.frac_part scaled by 10^-m.
    static Rational from_decimal(const std::string& int_digits,
                                 const std::string& frac_digits, bool negative);

    std::string str() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on zero divisor
    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
    bool operator<=(const Rational& o) const { return mpq_cmp(q_, o.q_) <= 0; }
    bool operator>(const Rational& o) const { return mpq_cmp(q_, o.q_) > 0; }
    bool operator>=(const Rational& o) const { return mpq_cmp(q_, o.q_) >= 0; }

    // Exact integer power; negative exponents invert (zero base rejected).
    Rational pow(long e) const;
    Rational abs() const;

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_negative() const { return mpq_sgn(q_) < 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    // Integer value when is_integer() and it fits a long.
    long to_long() const;
    bool fits_long() const;
    double to_double() const { return mpq_get_d(q_); }

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

  private:
    mpq_t q_;
};

Rational factorial(unsigned long n);

} // namespace zetareg::exact
