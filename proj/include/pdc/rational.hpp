#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pdc {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// "p" for integers, "p/q" otherwise; q > 0.
std::string to_string(const Rational& x);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// n! for n >= 0, and 0 for negative n.
Integer factorial(int n);

/// x (x+1) ... (x+k); the empty product 1 when k = -1.
Integer rising_product(long x, int k);

}  // namespace pdc
