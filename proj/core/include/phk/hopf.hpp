#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phk/poisson.hpp"
#include "phk/report.hpp"
#include "phk/tensor.hpp"

namespace phk {

/// Images of the generators under Δ, ε and (optionally) S. All three are
/// algebra maps, so generator images determine them.
struct CoalgebraData {
  std::vector<TensorPoly> delta;
  std::vector<Rational> counit;
  std::optional<std::vector<Poly>> antipode;

  /// Every generator primitive: Δx = x⊗1 + 1⊗x, ε(x) = 0, S(x) = -x.
  static CoalgebraData primitive(std::size_t nvars);
};

struct PoissonHopfAlgebra {
  PoissonStructure structure;
  std::optional<CoalgebraData> coalg;
  std::string name;
  std::map<std::string, std::string> params;

  std::size_t nvars() const noexcept { return structure.nvars(); }
  const std::vector<std::string>& names() const noexcept { return structure.names(); }

  /// Throws StructureError when no coalgebra data was supplied.
  const CoalgebraData& coalgebra() const;

  /// Throws StructureError unless every supplied component is over the same
  /// n variables and has n generator images.
  void validate_shape() const;
};

/// The algebra-map extension of Δ: Δ(1) = 1⊗1, Δ(x^α) = Π Δ(x_i)^{α_i}.
TensorPoly coproduct_extend(const PoissonHopfAlgebra& H, const Poly& f);

/// ε̂(f): evaluation at the point (ε(x_1), ..., ε(x_n)).
Rational counit_extend(const PoissonHopfAlgebra& H, const Poly& f);

/// Ŝ(f) = f(S(x_1), ..., S(x_n)). Throws StructureError without an antipode.
Poly antipode_extend(const PoissonHopfAlgebra& H, const Poly& f);

/// Coassociativity, both counit laws and (if S is given) both antipode laws,
/// one CheckResult per axiom. Every map involved is an algebra map, so
/// checking generators decides each identity on all of A.
std::vector<CheckResult> check_coalgebra_axioms(const PoissonHopfAlgebra& H);

enum class HopfStatus { HopfVerified, BialgebraVerified, Failed };

/// Summarises check_coalgebra_axioms: antipode skipped with everything else
/// passing means a bialgebra.
HopfStatus classify_hopf(const std::vector<CheckResult>& axioms);
std::string to_string(HopfStatus s);

/// (a) ε(x_i) = 0, (b) Δ(x_i) homogeneous of degree d_i under
/// deg(u⊗v) = deg u + deg v, (c) S(x_i) homogeneous of degree d_i.
/// Witnesses are prefixed "(a)", "(b)" or "(c)". Throws GradingError if the
/// structure has no grading.
CheckResult check_graded_connected(const PoissonHopfAlgebra& H);

/// Δ({x_i,x_j}) = {Δx_i, Δx_j}_⊗ for all i < j, and ε({x_i,x_j}) = 0.
/// Both sides are biderivations along the algebra map Δ, so generator pairs
/// suffice. Throws UnverifiedError unless the bracket is verified.
CheckResult check_poisson_coproduct(const PoissonHopfAlgebra& H);

/// S({x_i,x_j}) = -{S x_i, S x_j}. Informational; skipped without S.
CheckResult check_antipode_antimorphism(const PoissonHopfAlgebra& H);

/// Δ(x_i) == x_i⊗1 + 1⊗x_i.
bool is_primitive(const PoissonHopfAlgebra& H, std::size_t i);

}  // namespace phk
