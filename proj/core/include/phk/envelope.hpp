#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phk/lincomb.hpp"
#include "phk/poisson.hpp"
#include "phk/report.hpp"

namespace phk {

/// Element of the Poisson enveloping algebra U(A) in PBW normal form: a
/// combination of m_{x^α} h_{x_1}^{β_1} ... h_{x_n}^{β_n}, every m to the left
/// of every h and the h's in ascending generator order.
class UElement {
 public:
  /// (m-part α, h-part β).
  using Key = std::pair<Monomial, Monomial>;
  using Terms = LinComb<Key>;

  UElement() = default;
  explicit UElement(std::size_t nvars) : nvars_(nvars) {}

  static UElement one(std::size_t nvars);
  /// m_f for a polynomial f (m is linear and multiplicative).
  static UElement m(const Poly& f);
  /// The PBW generator h_{x_i}.
  static UElement h(std::size_t nvars, std::size_t i);
  static UElement basis(const Monomial& mpart, const Monomial& hpart, const Rational& c = Rational(1));

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms::Map& terms() const noexcept { return terms_.terms(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  Rational coefficient(const Key& k) const { return terms_.coefficient(k); }

  void add_term(const Key& k, const Rational& c);

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const Rational& c);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const Rational& c) { return a *= c; }
  friend UElement operator*(const Rational& c, UElement a) { return a *= c; }

  friend bool operator==(const UElement&, const UElement&) = default;

 private:
  void require_same(const UElement& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

std::string format_uelement(const UElement& u, const std::vector<std::string>& names);

/// Multiplication in U(A) by rewriting into PBW form with
///   h_{x_i} m_f → m_f h_{x_i} + m_{{x_i,f}}
///   h_{x_j} h_{x_i} → h_{x_i} h_{x_j} − h_{{x_i,x_j}}   (j > i)
/// and commutative multiplication of m-parts. Every rewrite lowers
/// (h-degree, inversions) lexicographically, so normalisation terminates.
///
/// Keeps a cache of reordered h-words; an instance is not safe for
/// concurrent use, distinct instances are independent.
class EnvelopeAlgebra {
 public:
  /// Throws UnverifiedError unless P is verified.
  explicit EnvelopeAlgebra(PoissonStructure P);

  const PoissonStructure& structure() const noexcept { return P_; }
  std::size_t nvars() const noexcept { return P_.nvars(); }

  UElement multiply(const UElement& u, const UElement& v) const;

  /// h_p in normal form: h_{x_i r} = m_r h_{x_i} + m_{x_i} h_r, h_1 = 0.
  UElement expand_h(const Poly& p) const;

  /// u^e.
  UElement power(const UElement& u, unsigned e) const;

 private:
  /// h_{x_i} · u for u in normal form.
  UElement left_mul_h(std::size_t i, const UElement& u) const;
  /// h_{x_i} · h^β, cached.
  const UElement& h_times_word(std::size_t i, const Monomial& beta) const;

  PoissonStructure P_;
  mutable std::map<std::pair<std::size_t, Monomial>, UElement> word_cache_;
};

/// Free-function forms. u_mul builds a fresh EnvelopeAlgebra per call; keep
/// an EnvelopeAlgebra around for repeated products.
UElement expand_h(const PoissonStructure& P, const Poly& p);
UElement u_mul(const PoissonStructure& P, const UElement& u, const UElement& v);

/// deg m_{x^α} h^β = Σ α_i d_i + Σ β_i (d_i + d). Returns nullopt for the
/// zero element. Throws GradingError if P is ungraded, its bracket is not
/// homogeneous, or the terms of u disagree in degree.
std::optional<long> u_degree(const PoissonStructure& P, const UElement& u);

struct HilbertReport {
  std::vector<Integer> dims;  ///< dims[s] for s = 0..N
  /// 2n, the GK dimension witnessed by the window; nullopt when the window
  /// is too short to certify it.
  std::optional<int> gk_evidence;
  /// Growth exponent of dims[s] itself (gk_evidence − 1).
  std::optional<int> growth_exponent;
  std::string note;
};

/// Dimension of the span of PBW monomials of each degree 0..N, i.e. the
/// coefficients of Π 1/(1−t^{d_i}) · Π 1/(1−t^{d_i+d}). Throws GradingError
/// when d < 0 (U(A) is then not connected ℕ-graded) or P is ungraded.
HilbertReport u_hilbert(const PoissonStructure& P, int N);

struct NakayamaReport {
  bool well_defined = false;
  bool identity = false;
  std::vector<std::string> failures;  ///< relation instances not preserved
};

/// Extends a Poisson derivation τ to ν(m_a) = m_a, ν(h_a) = h_a + m_{τ(a)} and
/// checks that ν preserves the defining relations on generators. Throws
/// StructureError if τ is not a Poisson derivation and UnverifiedError if P
/// is unverified.
NakayamaReport extend_poisson_derivation(const PoissonStructure& P, const Derivation& tau);

}  // namespace phk
