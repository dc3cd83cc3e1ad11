#pragma once

#include <string>
#include <string_view>

#include "relorbit/exact_numbers/real.hpp"

namespace relorbit::exact_numbers {

// Accepts "p", "p/q", decimals "1.25", and sums like "p/q+r/s*sqrt(d)" or "-sqrt(5)/2".
// Whitespace is ignored.
QuadraticScalar parse_scalar(std::string_view text);

// "p/q" or "p/q+r/s*sqrt(d)"; integers print without a denominator.
std::string format_scalar(const QuadraticScalar& x);
std::string format_rational(const Rational& r);

// Exact form for exact values, "[lo,hi]" for enclosures.
std::string format_exact(const Real& x);

// Rounded decimal with `digits` significant digits (enclosures print their midpoint).
std::string to_decimal(const QuadraticScalar& x, int digits = 40);
std::string to_decimal(const Real& x, int digits = 40);

}  // namespace relorbit::exact_numbers
