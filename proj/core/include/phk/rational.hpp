#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace phk {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" with an optional leading sign. Throws ParseError on
/// anything else, including q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace phk
