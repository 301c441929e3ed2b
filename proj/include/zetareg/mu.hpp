#pragma once

#include "zetareg/rational.hpp"
#include "zetareg/special.hpp"

#include <optional>

namespace zetareg::mucore {

using exact::Rational;
using special::EvalPrecision;

// Unit-width slice integral of x^r over [n-1, n]: (n^{r+1}-(n-1)^{r+1})/(r+1).
// r = -1 (logarithmic slice) is rejected.
double delta(double r, long n);

// The same slice exactly, for integer r >= 0.
Rational delta_exact(long r, long n);

// Binomial-expanded form (1/(r+1)) sum_{k=0}^{r} C(r+1,k) (-1)^{r-k} n^k;
// equal to delta_exact for every r >= 0, n >= 1.
Rational delta_binomial_form(long r, long n);

// The three exact derivation routes for mu at non-negative integer r.
Rational mu_int_zeta_sum(long r);   // (1/(r+1)) sum_k C(r+1,k) (-1)^{r-k} zeta(-k)
Rational mu_int_bernoulli(long r);  // ((-1)^r/((r+1)(r+2))) sum_{k=1}^{r+1} C(r+2,k) B_k
Rational mu_int_closed(long r);     // (-1)^{r+1} / ((r+1)(r+2))

// lambda(r) = 1 - sin(pi r)/(pi (r+1)); the removable point r = -1 takes its
// limit value 2.  Total over the reals, range (0.7827..., 2].
double lambda(double r);

// N-term partial sum of the vanishing-series representation of mu at
// non-integer r > -1.  Terms follow the recurrence t_k = c_k zeta(k-r-1),
// c_1 = 1, c_{k+1} = c_k (k-r-1)/(k+1), which keeps every factor bounded
// (the literal k! / Gamma form overflows binary64 near k = 171).
double mu_series_truncated(double r, long N, const EvalPrecision& prec = {});

struct Reciprocity {
    double mapped_argument; // -r-2
    double factor;          // sin(pi r) Gamma(-r-1) / pi
};

// mu(-r-2) = factor * mu(r); transports certificates across r = -1.
Reciprocity reciprocity_map(double r);

// Numeric evidence attached to a non-integer (zero) mu value.
struct ZeroCertificate {
    double lambda_value;
    long truncation_N;
    double truncated_series_value;
    // Populated when the argument lies below -1 and the series was evaluated
    // at the reciprocal argument -r-2 instead.
    std::optional<double> reciprocity_argument;
    std::optional<double> reciprocity_factor;
};

struct IntegerExact {
    Rational value;
    Rational route_zeta_sum;
    Rational route_bernoulli_sum;
    Rational route_closed_form;
    bool routes_agree;
};

struct MuValue {
    Rational argument;
    bool integer_branch;
    std::optional<IntegerExact> exact; // integer branch
    std::optional<ZeroCertificate> certificate; // non-integer branch: value is 0
};

// Dispatch: non-negative integers get all three exact routes; non-integers
// get 0 with a certificate (series at r, or transported through reciprocity
// for r < -1).  Negative integers are rejected.
MuValue mu(const Rational& r, long truncation_N = 200,
           const EvalPrecision& prec = {});

} // namespace zetareg::mucore
