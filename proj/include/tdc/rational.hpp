#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tdc {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// Parses `p/q` or an integer `p`. Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace tdc
