#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectau {

// mpq_class keeps every value reduced with a positive denominator as long as
// values are built through make_rational / parse_rational.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q", "-p/q". Anything with a decimal point or
// exponent is refused so that no float ever leaks into exact data.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace spectau
