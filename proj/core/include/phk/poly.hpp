#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "phk/lincomb.hpp"
#include "phk/monomial.hpp"
#include "phk/rational.hpp"

namespace phk {

/// Positive integer degrees d_1..d_n for the generators x_1..x_n. Weights of
/// at least one make A(0) = k, i.e. A is connected graded.
class Grading {
 public:
  Grading() = default;
  /// Throws GradingError if any weight is < 1.
  explicit Grading(std::vector<int> weights);

  static Grading standard(std::size_t nvars) { return Grading(std::vector<int>(nvars, 1)); }

  std::size_t size() const noexcept { return weights_.size(); }
  int operator[](std::size_t i) const { return weights_[i]; }
  std::span<const int> weights() const noexcept { return weights_; }
  long total() const noexcept;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::vector<int> weights_;
};

/// Element of A = k[x_1..x_n] in sparse exact form.
class Poly {
 public:
  using Terms = LinComb<Monomial>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms::Map& terms() const noexcept { return terms_.terms(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const Monomial& m) const { return terms_.coefficient(m); }
  /// Coefficient of the empty monomial.
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Formal partial derivative ∂/∂x_i (0-based i).
  Poly diff(std::size_t i) const;

  /// Evaluates at the point (values[0], ..., values[n-1]).
  Rational evaluate(std::span<const Rational> values) const;

  /// Algebra map x_i ↦ images[i].
  Poly substitute(std::span<const Poly> images) const;

  Poly pow(unsigned e) const;

 private:
  void require_same(const Poly& other) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Highest Σ w_i e_i over the terms of f; nullopt for the zero polynomial.
std::optional<long> weighted_degree(const Poly& f, const Grading& w);

/// Lowest weighted degree over the terms of f; nullopt for zero.
std::optional<long> weighted_low_degree(const Poly& f, const Grading& w);

/// Sum of the terms of f of weighted degree exactly s.
Poly homogeneous_component(const Poly& f, const Grading& w, long s);

bool is_homogeneous(const Poly& f, const Grading& w);

inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly poly_diff(const Poly& f, std::size_t i) { return f.diff(i); }

}  // namespace phk
