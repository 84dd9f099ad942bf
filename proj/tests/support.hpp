#pragma once

#include <string>
#include <vector>

#include "phk/expr.hpp"
#include "phk/poly.hpp"
#include "phk/random.hpp"
#include "phk/tensor.hpp"

namespace phk::test {

inline Poly P(const std::string& text, const std::vector<std::string>& names) { return parse_poly_expr(text, names); }
inline TensorPoly T(const std::string& text, const std::vector<std::string>& names) {
  return parse_tensor_expr(text, names);
}

/// Evaluates f at a point by Horner-free direct summation over the term map.
/// Used as an oracle independent of Poly arithmetic: two polynomials that
/// agree at many random rational points are equal (Schwartz–Zippel).
inline Rational eval(const Poly& f, const std::vector<Rational>& pt) {
  Rational s = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= pt[i];
    }
    s += t;
  }
  return s;
}

inline std::vector<Rational> random_point(Rng& rng, std::size_t n) {
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(Rational(rng.uniform(-7, 7)) / Rational(rng.uniform(1, 4)));
  return pt;
}

/// Binomial coefficient for small arguments; 0 when k < 0 or k > n.
inline long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace phk::test
