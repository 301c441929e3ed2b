#pragma once

#include "zetareg/rational.hpp"

#include <string>

namespace zetareg {

// 12-significant-digit decimal rendering with round-half-even, %g-style
// layout (fixed for exponents in (-5, 12), scientific otherwise, trailing
// zeros stripped).  The rational overload rounds the exact value, so it is
// correct even far beyond double range.
std::string decimal12(const exact::Rational& q);
std::string decimal12(double x);

// Exact finite decimal expansion; requires the denominator to be of the form
// 2^a 5^b (always true for parsed literals).  Used to print AST arguments.
std::string exact_decimal_text(const exact::Rational& q);

} // namespace zetareg
