#include "zetareg/special.hpp"

#include "zetareg/errors.hpp"
#include "zetareg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace zetareg::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

// 12-term rational Lanczos approximation, g chosen for ~1 ulp accuracy in
// binary64 across the positive axis.  Coefficients ascending in degree; the
// denominator is z(z+1)...(z+11) expanded.
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr double kLanczosNum[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};
constexpr double kLanczosDen[13] = {
    0, 39916800, 120543840, 150917976, 105258076, 45995730,
    13339535, 2637558, 357423, 32670, 1925, 66, 1,
};

double lanczos_sum(double x) {
    double num = kLanczosNum[12];
    double den = kLanczosDen[12];
    for (int i = 11; i >= 0; --i) {
        num = num * x + kLanczosNum[i];
        den = den * x + kLanczosDen[i];
    }
    return num / den;
}

// Gamma on [0.5, inf).  The power is split in half so arguments up to the
// binary64 overflow threshold of Gamma itself (~171.6) stay representable.
double gamma_positive(double x) {
    double zgh = x + kLanczosG - 0.5;
    double p = std::pow(zgh, (x - 0.5) / 2.0);
    return lanczos_sum(x) * p * std::exp(-zgh) * p;
}

int borwein_depth(double target_rel_error) {
    // error ~ 3 / (3 + sqrt(8))^n; generous slack, clamped to keep the
    // Chebyshev weights comfortably inside double range
    double eps = std::max(target_rel_error, 1e-17);
    double n = (std::log(3.0) - std::log(eps)) / std::log(3.0 + std::sqrt(8.0)) + 10.0;
    int depth = static_cast<int>(std::ceil(n));
    return std::clamp(depth, 32, 64);
}

// Alternating (eta) series with Chebyshev-weight acceleration; valid for
// s >= 0.5 here.  d_k are the acceleration weights; eta/zeta conversion
// denominator via expm1 stays fully accurate near s = 1.
double zeta_borwein(double s, const EvalPrecision& prec) {
    int n = borwein_depth(prec.target_rel_error);
    std::vector<double> d(static_cast<std::size_t>(n) + 1);
    double t = 1.0 / n;
    double sum_t = t;
    d[0] = n * sum_t;
    for (int i = 1; i <= n; ++i) {
        t *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        sum_t += t;
        d[static_cast<std::size_t>(i)] = n * sum_t;
    }
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        double term = (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(n)]) /
                      std::pow(k + 1.0, s);
        acc += (k % 2 == 0) ? term : -term;
    }
    double eta_den = -std::expm1((1.0 - s) * kLn2); // 1 - 2^{1-s}
    return -acc / (d[static_cast<std::size_t>(n)] * eta_den);
}

} // namespace

bool is_exact_integer(double x) {
    return std::isfinite(x) && std::floor(x) == x;
}

double sinpi(double x) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
    double r = std::remainder(x, 2.0); // r in [-1, 1], exact
    if (r > 0.5)
        r = 1.0 - r; // exact (Sterbenz)
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(kPi * r);
}

double gamma(double x) {
    if (is_exact_integer(x) && x <= 0.0)
        throw Error(ErrorCode::gamma_pole,
                    "gamma has a pole at " + std::to_string(static_cast<long long>(x)));
    if (x >= 0.5) return gamma_positive(x);
    // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    return kPi / (sinpi(x) * gamma_positive(1.0 - x));
}

double log_gamma_pos(double x) {
    double zgh = x + kLanczosG - 0.5;
    return std::log(lanczos_sum(x)) + (x - 0.5) * std::log(zgh) - zgh;
}

double reflection_residual(double a) {
    if (is_exact_integer(a))
        throw Error(ErrorCode::bad_argument, "reflection residual requires a non-integer argument");
    return gamma(1.0 - a) * gamma(a) - kPi / sinpi(a);
}

double gamma_sin_identity_residual(double r, long k) {
    if (is_exact_integer(r))
        throw Error(ErrorCode::bad_argument, "gamma-sin identity requires a non-integer argument");
    if (k < 1) throw Error(ErrorCode::bad_argument, "gamma-sin identity requires k >= 1");
    double kk = static_cast<double>(k);
    double lhs = 1.0 / (gamma(r - kk + 2.0) * gamma(-r + kk - 1.0));
    double rhs = sinpi(r) / kPi;
    if (k % 2 != 0) rhs = -rhs;
    return lhs - rhs;
}

double zeta_real(double s, const EvalPrecision& prec) {
    if (s == 1.0) throw Error(ErrorCode::zeta_pole, "zeta has a pole at s = 1");
    if (is_exact_integer(s) && s <= 0.0) {
        // Bernoulli route keeps the float value bit-identical to the exact one
        if (s < -static_cast<double>(exact::kMaxBernoulliIndex))
            throw Error(ErrorCode::argument_too_large,
                        "integer zeta argument below the exact-table cap");
        return exact::zeta_neg_int(static_cast<std::size_t>(-s)).to_double();
    }
    if (std::fabs(s - 1.0) < 1e-6)
        throw Error(ErrorCode::zeta_pole_proximity,
                    "s is inside the 1e-6 guard band around the pole at s = 1");
    if (s >= 0.5) return zeta_borwein(s, prec);
    // functional equation: zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    double z1 = zeta_borwein(1.0 - s, prec);
    double sg = sinpi(s / 2.0);
    if (1.0 - s > 150.0) {
        // assemble in log space; the direct product overflows long before
        // the result does
        double logmag = s * kLn2 + (s - 1.0) * std::log(kPi) + std::log(std::fabs(sg)) +
                        log_gamma_pos(1.0 - s) + std::log(z1);
        double mag = std::exp(logmag);
        return sg < 0.0 ? -mag : mag;
    }
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sg * gamma(1.0 - s) * z1;
}

double binomial_real(double r, long k) {
    if (k < 0) throw Error(ErrorCode::bad_argument, "binomial lower index must be >= 0");
    if (is_exact_integer(r)) {
        if (std::fabs(r) > 9.0e15)
            throw Error(ErrorCode::argument_too_large, "integer binomial argument too large");
        long ri = static_cast<long>(r);
        if (ri >= 0) return exact::binomial_exact(static_cast<unsigned long>(ri), k).to_double();
        // negative upper index: exact falling-factorial extension
        exact::Rational prod(1);
        for (long i = 0; i < k; ++i) prod *= exact::Rational(ri - i);
        return (prod / exact::factorial(static_cast<unsigned long>(k))).to_double();
    }
    // C(r, k) = prod_{i=1}^{k} (r - k + i) / i
    double prod = 1.0;
    for (long i = 1; i <= k; ++i)
        prod *= (r - static_cast<double>(k - i)) / static_cast<double>(i);
    return prod;
}

double binomial_real_gamma_form(double r, long k) {
    if (k < 0) throw Error(ErrorCode::bad_argument, "binomial lower index must be >= 0");
    return gamma(r + 1.0) /
           (exact::factorial(static_cast<unsigned long>(k)).to_double() * gamma(r - k + 1.0));
}

} // namespace zetareg::special
