#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projflow {

/// Exact rational; GMP keeps it canonical (reduced, positive denominator)
/// as long as values are built through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;

Rat rat(long num, long den = 1);

/// Accepts "p", "p/q" and plain decimals such as "-0.125".
Rat parse_rat(std::string_view text);

/// "p/q", or "p" for integers.
std::string to_string(const Rat& r);

bool is_integer(const Rat& r);
Rat pow(const Rat& base, int exponent);
Rat abs(const Rat& r);
int sign(const Rat& r);

long double to_long_double(const Int& z);
long double to_long_double(const Rat& r);

/// Decimal digits of the larger of numerator and denominator.
std::size_t digit_count(const Rat& r);

}  // namespace projflow
