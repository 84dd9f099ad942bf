#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phk/grfilter.hpp"
#include "phk/hopf.hpp"

namespace phk {

/// Where a golden value comes from.
enum class Source {
  Published,    ///< stated in the literature for this example
  HandDerived,  ///< worked out by hand from published data
  Trivial,      ///< immediate from the definitions
};

std::string to_string(Source s);

template <class T>
struct Golden {
  T value;
  Source source = Source::Published;
};

struct Expected {
  std::optional<Golden<std::vector<Poly>>> delta;
  std::optional<Golden<bool>> unimodular;
  std::optional<Golden<BracketDegree>> degree;
  /// Outer optional: whether t is recorded. Inner nullopt: commutative.
  std::optional<Golden<std::optional<long>>> t;
  std::optional<Golden<PoissonStructure>> induced;
  /// Suite checks that fail by design, e.g. graded_connected for a
  /// bialgebra whose group-like generator has counit 1.
  std::vector<std::string> failing_checks;
};

struct CatalogEntry {
  std::string name;
  std::map<std::string, std::string> params;
  std::optional<PoissonHopfAlgebra> algebra;
  std::optional<FilteredPresentation> presentation;
  Expected expected;
  std::map<std::string, std::string> metadata;
};

/// Structure constants [x_i, x_j] = Σ_k c[i][j][k] x_k of a Lie algebra.
struct LieAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Rational>>> c;

  explicit LieAlgebra(std::vector<std::string> names);
  /// Sets [x_i, x_j] = Σ_k coeffs[k] x_k and [x_j, x_i] to its negative.
  void set(std::size_t i, std::size_t j, std::vector<Rational> coeffs);
  /// Triples (i, j, k) on which the Jacobi identity fails.
  std::vector<std::array<std::size_t, 3>> jacobi_failures() const;
  /// tr ad(x_i) = Σ_k c[i][k][k].
  Rational trace_ad(std::size_t i) const;
};

LieAlgebra lie_nonabelian2();
LieAlgebra lie_heisenberg3();
LieAlgebra lie_sl2();

/// k[a,b,c,z,w] with {a,b} = c, {z,w} = c³/3, primitive a, b, c and
/// Δz = z⊗1 + 1⊗z + a⊗c − c⊗a, Δw = w⊗1 + 1⊗w + b⊗c − c⊗b. Graded by
/// (1,1,1,2,2) with bracket degree −1, or by (1,1,2,3,3) with degree 0.
CatalogEntry unitriangular5(bool coradical_grading);

/// k[x,y] with {x,y} = xy, Δy = y⊗y, Δx = x⊗1 + y^i⊗x, ε = (0, 1). A
/// bialgebra graded by (1,1) with bracket degree 0 and δ = (x, −y).
CatalogEntry grouplike_bialgebra(unsigned i);

/// Symmetric algebra of a Lie algebra, generators in degree 1, primitive
/// coproduct. Throws StructureError if the constants violate Jacobi.
CatalogEntry kostant_souriau(const LieAlgebra& g, const std::string& label = "custom");

/// Associated graded of the filtered algebra [X,Y] = 0, [Z,X] = λX + αY,
/// [Z,Y] = μY with weights (1,1,2): {z,x} = λx + αy, {z,y} = μy.
CatalogEntry grA(const Rational& lambda, const Rational& mu, int alpha);

/// Associated graded of [X,Y] = Y, [Z,X] = −Z + λY, [Z,Y] = Y²/2 with
/// weights (1,1,2): {x,y} = y, {z,x} = −z, {z,y} = y²/2 for every λ.
CatalogEntry grB(const Rational& lambda);

/// Zero bracket on n primitive generators with the given weights.
CatalogEntry zero_bracket(std::size_t n, std::vector<int> weights);

/// Representatives (λ, μ, α) of the isomorphism classes of grA, with the
/// one-parameter family (1, μ^{±1}, 0) instantiated at the given μ ≠ 0.
std::vector<std::array<Rational, 3>> grA_classes(const Rational& mu);

/// Entry names accepted by catalog_get.
std::vector<std::string> catalog_names();

/// Builds an entry from string parameters. Throws InputError for an unknown
/// name or parameter and StructureError for non-Jacobi Lie constants.
///
///   unitriangular5_coradical, unitriangular5_degree0  (no parameters)
///   grouplike_bialgebra   i=<n>                       (default 1)
///   kostant_souriau       lie=nonabelian2|heisenberg3|sl2, or
///                         names=h,e,f brackets="h,e=2*e; h,f=-2*f; e,f=h"
///   grA                   lambda, mu, alpha            (default 1,1,1)
///   grB                   lambda                       (default 0)
///   zero_bracket          n, weights=1,1,1             (default n=3)
CatalogEntry catalog_get(const std::string& name, const std::map<std::string, std::string>& params = {});

/// Every entry at its default parameters plus the Lie presets and the grA
/// isomorphism classes (μ ∈ {1, 2, 1/2}).
std::vector<CatalogEntry> catalog_all();

}  // namespace phk
