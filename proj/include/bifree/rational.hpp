#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bifree {

/// Exact arbitrary-precision fraction. GMP keeps results of arithmetic in
/// lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (base 10). Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are printed without a denominator.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace bifree
