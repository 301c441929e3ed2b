#pragma once

#include "zetareg/rational.hpp"

namespace zetareg::special {

struct EvalPrecision {
    double target_rel_error = 1e-12;
    long max_terms = 10000;
};

// True iff x is an exactly representable integer (no epsilon fuzz).
bool is_exact_integer(double x);

// sin(pi*x) with argument reduction exact in binary64; exactly 0 at integers.
double sinpi(double x);

// Gamma(x) to relative error well under 1e-12 on |x| <= 50.  Negative and
// small arguments go through the reflection formula.  Errors at x in
// {0, -1, -2, ...} (exact-integer detection).
double gamma(double x);

// log Gamma(x) for x > 0 (used to assemble huge-argument products safely).
double log_gamma_pos(double x);

// Gamma(1-a)*Gamma(a) - pi/sin(pi*a); errors on integer a.
double reflection_residual(double a);

// 1/(Gamma(r-k+2)*Gamma(-r+k-1)) - (-1)^k * sin(pi*r)/pi; r non-integer.
double gamma_sin_identity_residual(double r, long k);

// Riemann zeta for real s != 1.  Exact-integer s <= 0 uses the Bernoulli
// route (matches the exact module bit-for-bit).  s >= 0.5 uses an accelerated
// alternating series; s < 0.5 the functional equation.  Relative error well
// under 1e-10 on [-30, 30] outside the pole guard band; |s-1| < 1e-6 raises
// a pole-proximity error, s = 1 a pole error.
double zeta_real(double s, const EvalPrecision& prec = {});

// C(r, k) = Gamma(r+1)/(k! Gamma(r-k+1)) via the falling-factorial product;
// exact (rational) path when r is an exact integer.  C(r, 0) = 1 exactly.
double binomial_real(double r, long k);

// Same quantity through the literal gamma-function ratio, kept as an identity
// cross-check (requires r-k+1 away from non-positive integers).
double binomial_real_gamma_form(double r, long k);

} // namespace zetareg::special
