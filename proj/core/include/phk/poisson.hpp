#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phk/poly.hpp"
#include "phk/report.hpp"
#include "phk/tensor.hpp"

namespace phk {

/// Poisson bracket on k[x_1..x_n] given by its structure polynomials
/// p_ij = {x_i, x_j}. The table is kept antisymmetric. The volume form is
/// always dx_1 ∧ ... ∧ dx_n.
///
/// A structure starts out unverified. `verify()` runs the Jacobi check and
/// marks it verified on success; any later edit of the table clears the mark.
class PoissonStructure {
 public:
  PoissonStructure() = default;
  explicit PoissonStructure(std::vector<std::string> names, std::optional<Grading> grading = std::nullopt);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// p_ij (0-based). p_ii is zero and p_ji = -p_ij.
  const Poly& entry(std::size_t i, std::size_t j) const;
  /// Sets p_ij := p and p_ji := -p. Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, Poly p);

  bool is_zero() const;

  const std::optional<Grading>& grading() const noexcept { return grading_; }
  void set_grading(std::optional<Grading> g);

  bool verified() const noexcept { return verified_; }
  /// Runs the Jacobi check; marks the structure verified if it passes.
  CheckResult verify();

  /// Index of a generator by name; nullopt if absent.
  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const PoissonStructure& a, const PoissonStructure& b) {
    return a.names_ == b.names_ && a.table_ == b.table_ && a.grading_ == b.grading_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Poly> table_;  // row-major n×n
  std::optional<Grading> grading_;
  bool verified_ = false;
};

/// Images τ(x_1), ..., τ(x_n) of a derivation of A.
struct Derivation {
  std::vector<Poly> images;

  /// τ(f) = Σ_m ∂f/∂x_m · τ(x_m).
  Poly apply(const Poly& f) const;
  bool is_zero() const;
  Derivation scaled(const Rational& c) const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// {f, g} = Σ_{i<j} p_ij (∂_i f ∂_j g − ∂_j f ∂_i g).
Poly bracket(const PoissonStructure& P, const Poly& f, const Poly& g);

/// Hamiltonian action {x_i, f} = Σ_j p_ij ∂_j f.
Poly hamiltonian(const PoissonStructure& P, std::size_t i, const Poly& f);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Poly jacobiator(const PoissonStructure& P, const Poly& f, const Poly& g, const Poly& h);

struct JacobiFailure {
  std::size_t i, j, k;
  Poly value;
};

struct JacobiReport {
  std::vector<JacobiFailure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Jacobi identity on all coordinate triples i < j < k. The jacobiator of a
/// bracket extended from a bivector is a triderivation, so coordinate
/// triples decide it.
JacobiReport validate_poisson(const PoissonStructure& P);

/// Degree d of a graded bracket: {A(i), A(j)} ⊆ A(i+j+d).
struct BracketDegree {
  enum class Kind { Homogeneous, Any, NotHomogeneous };
  Kind kind = Kind::Any;
  long d = 0;

  /// The zero bracket ("any") counts as nonnegative.
  bool nonnegative() const noexcept { return kind == Kind::Any || (kind == Kind::Homogeneous && d >= 0); }
  /// d for a homogeneous bracket, 0 for the zero bracket.
  long effective() const;
  std::string to_string() const;

  friend bool operator==(const BracketDegree&, const BracketDegree&) = default;
};

/// Throws GradingError if P carries no grading.
BracketDegree bracket_degree(const PoissonStructure& P);

/// {a⊗b, c⊗d} = {a,c}⊗bd + ac⊗{b,d}, extended bilinearly.
TensorPoly tensor_bracket(const PoissonStructure& P, const TensorPoly& u, const TensorPoly& v);

struct ModularDerivation {
  Derivation delta;
  bool unimodular = false;
};

/// δ(x_i) = Σ_j ∂{x_i, x_j}/∂x_j. δ is a derivation, so it vanishes iff it
/// vanishes on generators. Throws UnverifiedError unless P.verified().
ModularDerivation modular_derivation(const PoissonStructure& P);

struct DerivationCheck {
  std::vector<std::array<std::size_t, 2>> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// τ({x_i,x_j}) = {τx_i, x_j} + {x_i, τx_j} for all i < j.
DerivationCheck check_poisson_derivation(const PoissonStructure& P, const Derivation& tau);

}  // namespace phk
