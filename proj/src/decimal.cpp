#include "zetareg/decimal.hpp"

#include "zetareg/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace zetareg {

namespace {

constexpr int kDigits = 12;

// %g-style layout for a 12-digit mantissa and decimal exponent e
// (value = 0.d1 d2... * 10^{e+1}, i.e. e = floor(log10 |value|)).
std::string layout(const std::string& digits, long e, bool neg) {
    std::string body;
    if (e > -5 && e < kDigits) {
        if (e >= 0) {
            std::string ip = digits.substr(0, static_cast<std::size_t>(e) + 1);
            std::string fp = digits.substr(static_cast<std::size_t>(e) + 1);
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            body = fp.empty() ? ip : ip + "." + fp;
        } else {
            std::string fp = std::string(static_cast<std::size_t>(-e) - 1, '0') + digits;
            while (!fp.empty() && fp.back() == '0') fp.pop_back();
            body = "0." + fp;
        }
    } else {
        std::string fp = digits.substr(1);
        while (!fp.empty() && fp.back() == '0') fp.pop_back();
        char exp_buf[32];
        std::snprintf(exp_buf, sizeof exp_buf, "e%c%02ld", e < 0 ? '-' : '+',
                      e < 0 ? -e : e);
        body = digits.substr(0, 1) + (fp.empty() ? "" : "." + fp) + exp_buf;
    }
    return neg ? "-" + body : body;
}

} // namespace

std::string decimal12(const exact::Rational& q) {
    if (q.is_zero()) return "0";
    bool neg = q.is_negative();

    mpz_t a, b, t, m, rem;
    mpz_inits(a, b, t, m, rem, nullptr);
    mpz_abs(a, mpq_numref(q.raw()));
    mpz_set(b, mpq_denref(q.raw()));

    // e = floor(log10(a/b)): position so that b*10^e <= a < b*10^{e+1}
    long e = static_cast<long>(mpz_sizeinbase(a, 10)) -
             static_cast<long>(mpz_sizeinbase(b, 10));
    auto a_below_b_pow = [&](long p) {
        // a < b * 10^p ?
        if (p >= 0) {
            mpz_ui_pow_ui(t, 10, static_cast<unsigned long>(p));
            mpz_mul(t, t, b);
            return mpz_cmp(a, t) < 0;
        }
        mpz_ui_pow_ui(t, 10, static_cast<unsigned long>(-p));
        mpz_mul(t, t, a);
        return mpz_cmp(t, b) < 0;
    };
    while (a_below_b_pow(e)) --e;
    while (!a_below_b_pow(e + 1)) ++e;

    // m = round_half_even(a * 10^{11-e} / b), a 12-digit integer
    long shift = (kDigits - 1) - e;
    if (shift >= 0) {
        mpz_ui_pow_ui(t, 10, static_cast<unsigned long>(shift));
        mpz_mul(t, t, a);
        mpz_fdiv_qr(m, rem, t, b);
    } else {
        mpz_ui_pow_ui(t, 10, static_cast<unsigned long>(-shift));
        mpz_mul(t, t, b);
        mpz_fdiv_qr(m, rem, a, t);
        mpz_set(b, t); // remainder is relative to the scaled denominator
    }
    mpz_mul_2exp(rem, rem, 1); // rem *= 2
    int cmp = mpz_cmp(rem, b);
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(m))) mpz_add_ui(m, m, 1);

    char* ds = mpz_get_str(nullptr, 10, m);
    std::string digits(ds);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(ds, digits.size() + 1);
    mpz_clears(a, b, t, m, rem, nullptr);

    if (digits.size() == kDigits + 1) { // rounded up to 10^12
        digits = digits.substr(0, kDigits);
        ++e;
    }
    return layout(digits, e, neg);
}

std::string decimal12(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    if (x == 0.0) return "0"; // normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kDigits, x);
    return buf;
}

std::string exact_decimal_text(const exact::Rational& q) {
    mpz_t d, two, five, scaled;
    mpz_inits(d, two, five, scaled, nullptr);
    mpz_set(d, mpq_denref(q.raw()));
    mpz_set_ui(two, 2);
    mpz_set_ui(five, 5);
    unsigned long a = mpz_remove(d, d, two);
    unsigned long b = mpz_remove(d, d, five);
    bool finite = mpz_cmp_ui(d, 1) == 0;
    if (!finite) {
        mpz_clears(d, two, five, scaled, nullptr);
        throw Error(ErrorCode::bad_argument,
                    "value has no finite decimal expansion");
    }
    unsigned long k = a > b ? a : b;
    mpz_abs(scaled, mpq_numref(q.raw()));
    mpz_ui_pow_ui(d, 2, k - a);
    mpz_mul(scaled, scaled, d);
    mpz_ui_pow_ui(d, 5, k - b);
    mpz_mul(scaled, scaled, d);
    char* ds = mpz_get_str(nullptr, 10, scaled);
    std::string digits(ds);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(ds, digits.size() + 1);
    mpz_clears(d, two, five, scaled, nullptr);

    if (digits.size() < k + 1) digits.insert(0, k + 1 - digits.size(), '0');
    std::string body = k == 0 ? digits
                              : digits.substr(0, digits.size() - k) + "." +
                                    digits.substr(digits.size() - k);
    return q.is_negative() ? "-" + body : body;
}

} // namespace zetareg
