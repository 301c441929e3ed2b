#include "zetareg/rational.hpp"

#include "zetareg/errors.hpp"

#include <cctype>

namespace zetareg::exact {

Rational::Rational(long num, long den) {
    mpq_init(q_);
    if (den == 0)
        throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
    mpq_set_si(q_, num, 1);
    mpz_set_si(mpq_denref(q_), den);
    mpq_canonicalize(q_);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string t = text;
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorCode::bad_argument, "malformed rational text: \"" + text + "\"");
    Rational r;
    if (mpz_set_str(mpq_numref(r.q_), num.c_str(), 10) != 0 ||
        mpz_set_str(mpq_denref(r.q_), den.c_str(), 10) != 0)
        throw Error(ErrorCode::bad_argument, "malformed rational text: \"" + text + "\"");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw Error(ErrorCode::division_by_zero, "rational with zero denominator: \"" + text + "\"");
    mpq_canonicalize(r.q_);
    if (neg) mpq_neg(r.q_, r.q_);
    return r;
}

Rational Rational::from_decimal(const std::string& int_digits,
                                const std::string& frac_digits, bool negative) {
    if (!all_digits(int_digits) || !(frac_digits.empty() || all_digits(frac_digits)))
        throw Error(ErrorCode::bad_argument, "malformed decimal literal");
    Rational r;
    std::string digits = int_digits + frac_digits;
    if (mpz_set_str(mpq_numref(r.q_), digits.c_str(), 10) != 0)
        throw Error(ErrorCode::bad_argument, "malformed decimal literal");
    mpz_ui_pow_ui(mpq_denref(r.q_), 10, frac_digits.size());
    mpq_canonicalize(r.q_);
    if (negative) mpq_neg(r.q_, r.q_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0)
        throw Error(ErrorCode::division_by_zero, "zero to a negative power");
    Rational r;
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), ue);
    mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), ue);
    if (e < 0) mpq_inv(r.q_, r.q_);
    // powers of a canonical fraction stay canonical (gcd(a^n, b^n) = 1)
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
}

bool Rational::fits_long() const {
    return is_integer() && mpz_fits_slong_p(mpq_numref(q_)) != 0;
}

long Rational::to_long() const {
    if (!fits_long())
        throw Error(ErrorCode::bad_argument, "value is not a machine-size integer");
    return mpz_get_si(mpq_numref(q_));
}

Rational factorial(unsigned long n) {
    Rational r;
    mpz_fac_ui(mpq_numref(r.raw()), n);
    return r;
}

} // namespace zetareg::exact

namespace zetareg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::gamma_pole: return "gamma_pole";
        case ErrorCode::zeta_pole: return "zeta_pole";
        case ErrorCode::zeta_pole_proximity: return "zeta_pole_proximity";
        case ErrorCode::mu_negative_integer: return "mu_negative_integer";
        case ErrorCode::argument_log_pole: return "argument_log_pole";
        case ErrorCode::nonconvergent_domain: return "nonconvergent_domain";
        case ErrorCode::divergence_suspected: return "divergence_suspected";
        case ErrorCode::tail_bound_unavailable: return "tail_bound_unavailable";
        case ErrorCode::unknown_series: return "unknown_series";
        case ErrorCode::bad_argument: return "bad_argument";
        case ErrorCode::argument_too_large: return "argument_too_large";
        case ErrorCode::grid_too_large: return "grid_too_large";
        case ErrorCode::division_by_zero: return "division_by_zero";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::unknown_function: return "unknown_function";
        case ErrorCode::bad_arity: return "bad_arity";
        case ErrorCode::malformed_number: return "malformed_number";
        case ErrorCode::bad_series_file: return "bad_series_file";
        case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

bool is_parse_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error:
        case ErrorCode::unknown_function:
        case ErrorCode::bad_arity:
        case ErrorCode::malformed_number:
        case ErrorCode::bad_series_file:
            return true;
        default:
            return false;
    }
}

} // namespace zetareg
