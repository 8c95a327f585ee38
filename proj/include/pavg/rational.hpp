#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pavg/errors.hpp"

namespace pavg {

// Exact rational values are GMP rationals kept in canonical form
// (gcd(|num|, den) = 1, den >= 1). All construction goes through the
// helpers below, which canonicalize.
using Rational = mpq_class;

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// num/den in lowest terms. den must be nonzero.
Rational make_rational(i64 num, i64 den = 1);
Rational make_rational_u64(u64 num, u64 den = 1);

// Exact conversion: every finite double is a rational.
Rational rational_from_double(double x);

// Accepts "n", "-n", "a/b" and decimal forms such as "19.5".
// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Requires an integral value that fits in int64. Throws IntegrityError otherwise.
i64 rational_to_i64(const Rational& q);

// "num/den", or just "num" when the denominator is 1.
std::string fraction_string(const Rational& q);

// Round-to-nearest decimal with the given number of significant digits
// (default 15). Trailing zeros are trimmed; integral values print with
// no decimal point.
std::string decimal_string(const Rational& q, int significant_digits = 15);

// Shortest round-trip decimal form of a double (std::to_chars); used for
// plot data and notes where the value is informational.
std::string double_string(double x);

// sign of a*b - c*d for unsigned 64-bit operands, computed exactly.
int cmp_products(u64 a, u64 b, u64 c, u64 d);

// a*b into *out; false on 64-bit overflow.
bool checked_mul_u64(u64 a, u64 b, u64* out);

}  // namespace pavg
