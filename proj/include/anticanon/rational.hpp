// Exact rational scalars used throughout the library.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anticanon {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Renders `q` as `p/q` in lowest terms, or `p` when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses `p` or `p/q` (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& q);

/// Converts an integer-valued rational to int64, throwing std::overflow_error
/// when it does not fit and std::domain_error when it is not integral.
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);

/// Least common multiple of the denominators of `v` (1 for an empty vector).
Integer common_denominator(const RationalVector& v);

}  // namespace anticanon
