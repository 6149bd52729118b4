#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffcent {

// Exact arbitrary-precision rational; always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

// Accepts "a", "-a", "a/b" with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "a" when the denominator is 1, otherwise "a/b".
std::string format_rational(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace cliffcent
