#include "zetareg/mu.hpp"

#include "zetareg/errors.hpp"
#include "zetareg/exact.hpp"

#include <cmath>
#include <numbers>

namespace zetareg::mucore {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kMaxIntegerMu = 500;

void require_slice_index(long n) {
    if (n < 1) throw Error(ErrorCode::bad_argument, "slice index n must be >= 1");
}

} // namespace

double delta(double r, long n) {
    if (r == -1.0)
        throw Error(ErrorCode::argument_log_pole, "delta at r = -1 is the logarithmic slice");
    require_slice_index(n);
    double e = r + 1.0;
    return (std::pow(static_cast<double>(n), e) - std::pow(static_cast<double>(n - 1), e)) / e;
}

Rational delta_exact(long r, long n) {
    if (r < 0) throw Error(ErrorCode::bad_argument, "exact slice requires r >= 0");
    require_slice_index(n);
    Rational e(r + 1);
    return (Rational(n).pow(r + 1) - Rational(n - 1).pow(r + 1)) / e;
}

Rational delta_binomial_form(long r, long n) {
    if (r < 0) throw Error(ErrorCode::bad_argument, "binomial slice form requires r >= 0");
    require_slice_index(n);
    // (1/(r+1)) sum_{k=0}^{r} C(r+1, k) (-1)^{r-k} n^k
    Rational sum(0);
    for (long k = 0; k <= r; ++k) {
        Rational term = exact::binomial_exact(static_cast<unsigned long>(r) + 1, k) *
                        Rational(n).pow(k);
        sum += ((r - k) % 2 == 0) ? term : -term;
    }
    return sum / Rational(r + 1);
}

Rational mu_int_zeta_sum(long r) {
    if (r < 0) throw Error(ErrorCode::bad_argument, "integer route requires r >= 0");
    // (1/(r+1)) sum_{k=0}^{r} C(r+1, k) (-1)^{r-k} zeta(-k)
    Rational sum(0);
    for (long k = 0; k <= r; ++k) {
        Rational term = exact::binomial_exact(static_cast<unsigned long>(r) + 1, k) *
                        exact::zeta_neg_int(static_cast<std::size_t>(k));
        sum += ((r - k) % 2 == 0) ? term : -term;
    }
    return sum / Rational(r + 1);
}

Rational mu_int_bernoulli(long r) {
    if (r < 0) throw Error(ErrorCode::bad_argument, "integer route requires r >= 0");
    Rational prefactor = Rational(1) / Rational((r + 1) * (r + 2));
    if (r % 2 != 0) prefactor = -prefactor;
    return prefactor * exact::bernoulli_binomial_sum(static_cast<std::size_t>(r));
}

Rational mu_int_closed(long r) {
    if (r < 0) throw Error(ErrorCode::bad_argument, "integer route requires r >= 0");
    Rational v(1, (r + 1) * (r + 2));
    return (r % 2 == 0) ? -v : v;
}

double lambda(double r) {
    if (r == -1.0) return 2.0; // removable singularity, limit value
    return 1.0 - special::sinpi(r) / (kPi * (r + 1.0));
}

double mu_series_truncated(double r, long N, const EvalPrecision& prec) {
    if (special::is_exact_integer(r))
        throw Error(ErrorCode::bad_argument, "series certificate requires a non-integer argument");
    if (r <= -1.0)
        throw Error(ErrorCode::nonconvergent_domain,
                    "series converges only for r > -1; use the reciprocity map");
    if (N < 1) throw Error(ErrorCode::bad_argument, "truncation depth must be >= 1");
    if (N > prec.max_terms)
        throw Error(ErrorCode::argument_too_large, "truncation depth exceeds max_terms");
    double sum = 0.0;
    double c = 1.0; // c_1; then c_{k+1} = c_k (k-r-1)/(k+1)
    for (long k = 1; k <= N; ++k) {
        double kk = static_cast<double>(k);
        sum += c * special::zeta_real(kk - r - 1.0, prec);
        c *= (kk - r - 1.0) / (kk + 1.0);
    }
    return sum;
}

Reciprocity reciprocity_map(double r) {
    if (special::is_exact_integer(r))
        throw Error(ErrorCode::bad_argument, "reciprocity map requires a non-integer argument");
    // -r-1 is non-integer here, so gamma never hits a pole
    return {-r - 2.0, special::sinpi(r) * special::gamma(-r - 1.0) / kPi};
}

MuValue mu(const Rational& r, long truncation_N, const EvalPrecision& prec) {
    MuValue out;
    out.argument = r;
    if (r.is_integer()) {
        out.integer_branch = true;
        if (!r.fits_long())
            throw Error(ErrorCode::argument_too_large, "integer mu argument out of range");
        long ri = r.to_long();
        if (ri == -1)
            throw Error(ErrorCode::argument_log_pole,
                        "mu(-1) is the logarithmic case and is not defined");
        if (ri < 0)
            throw Error(ErrorCode::mu_negative_integer,
                        "mu is not defined at negative integers");
        if (ri > kMaxIntegerMu)
            throw Error(ErrorCode::argument_too_large,
                        "integer mu argument capped at " + std::to_string(kMaxIntegerMu));
        IntegerExact ie;
        ie.route_zeta_sum = mu_int_zeta_sum(ri);
        ie.route_bernoulli_sum = mu_int_bernoulli(ri);
        ie.route_closed_form = mu_int_closed(ri);
        ie.routes_agree = ie.route_zeta_sum == ie.route_bernoulli_sum &&
                          ie.route_bernoulli_sum == ie.route_closed_form;
        ie.value = ie.route_closed_form;
        out.exact = std::move(ie);
        return out;
    }
    out.integer_branch = false;
    double rd = r.to_double();
    if (special::is_exact_integer(rd))
        throw Error(ErrorCode::bad_argument,
                    "argument is indistinguishable from an integer in binary64");
    ZeroCertificate cert;
    cert.lambda_value = lambda(rd);
    cert.truncation_N = truncation_N;
    if (rd > -1.0) {
        cert.truncated_series_value = mu_series_truncated(rd, truncation_N, prec);
    } else {
        // evaluate inside the convergence domain and transport the value
        double src = -rd - 2.0;
        Reciprocity rec = reciprocity_map(src);
        cert.truncated_series_value =
            rec.factor * mu_series_truncated(src, truncation_N, prec);
        cert.reciprocity_argument = src;
        cert.reciprocity_factor = rec.factor;
    }
    out.certificate = std::move(cert);
    return out;
}

} // namespace zetareg::mucore
