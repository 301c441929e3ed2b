#pragma once

#include "zetareg/rational.hpp"

#include <functional>
#include <optional>
#include <string>

namespace zetareg::regint {

using exact::Rational;

// Coefficient provider for f(x) = sum a_k x^k.  coefficient must be total
// over k >= 0 and side-effect free.
struct PowerSeries {
    std::string name;
    std::function<Rational(long)> coefficient;
    // Optional rigorous bound on |sum_{k>N} a_k mu(k)|, non-increasing in N.
    std::function<double(long)> tail_bound;
    // Largest k with a_k != 0 for finite-support (file-backed) series.
    std::optional<long> last_nonzero;
};

struct RegularizedResult {
    double value;          // sum_{k=0}^{N} a_k mu(k), rounded once at the end
    Rational exact_sum;    // the same sum before rounding
    long partial_sum_N;
    double tail_estimate;  // >= 0
    std::optional<std::string> closed_form; // known limit, symbolic text
};

inline constexpr long kMaxMuSumN = 50000;

// Exact sum_{k=0}^{N} mu(k) = sum (-1)^{k+1}/((k+1)(k+2)).
Rational mu_sum_partial(long N);

// Term-by-term regularization sum_{k=0}^{N} a_k mu(k) in exact arithmetic.
// Raises divergence-suspected when the nonzero term magnitudes fail to decay
// over the last 10 samples; tail estimate from the declared bound, else the
// first omitted nonzero term for alternating series, else an error.
RegularizedResult regularize_integral(const PowerSeries& series, long N);

// exp, geometric, sin, cos with exact coefficients.
PowerSeries builtin_series(const std::string& name);

// Parse "k,p/q" lines (strictly increasing k, '#' comments) into a
// finite-support series named after the file stem.
PowerSeries series_from_file(const std::string& path);

// The constant 1 - log 4 (= log(e/4)), the closed form of sum mu(k).
double double_integral_remark();

} // namespace zetareg::regint
