#pragma once

#include <string_view>

#include "projflow/rational_function.hpp"

namespace projflow {

/// Parses expressions in x and y such as "x^4/y^2 + x*y" or "-(3/2)*x*y".
/// Supports + - * / ^ (integer exponents) and parentheses; numbers are
/// integers, fractions via '/', or decimals.
RationalFunction2 parse_rational_function(std::string_view text);

/// As above, but the result must be a polynomial.
BivarPoly parse_polynomial(std::string_view text);

}  // namespace projflow
