#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phk/poisson.hpp"

namespace phk {

/// Generators y_1..y_n of a filtered algebra with filtration levels m_i and
/// their commutators [y_i, y_j] written as PBW-ordered words, i.e. as
/// ordinary polynomials in the y's.
class FilteredPresentation {
 public:
  FilteredPresentation() = default;
  /// Throws GradingError if a filtration weight is < 1.
  FilteredPresentation(std::vector<std::string> names, std::vector<int> filtration_weights);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Grading& weights() const noexcept { return weights_; }

  /// [y_i, y_j]; antisymmetric, zero on the diagonal.
  const Poly& commutator(std::size_t i, std::size_t j) const;
  void set_commutator(std::size_t i, std::size_t j, Poly c);

  /// Whether the presentation comes from a connected Hopf algebra with its
  /// coradical filtration, in which case compute_t insists on t >= 1.
  bool connected = true;

  friend bool operator==(const FilteredPresentation& a, const FilteredPresentation& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_ && a.table_ == b.table_ && a.connected == b.connected;
  }

 private:
  std::vector<std::string> names_;
  Grading weights_;
  std::vector<Poly> table_;
};

/// Filtration level of p: the largest weight sum of its PBW words. Reordering
/// corrections of a PBW word lie in strictly lower filtration, so this bound
/// is all the top-component extraction needs.
std::optional<long> filtration_degree(const Poly& p, const Grading& weights);

/// t = min over nonzero [y_i,y_j] of (m_i + m_j − filtration_degree); nullopt
/// when all commutators vanish (commutative). Throws StructureError if the
/// presentation is flagged connected and t < 1.
std::optional<long> compute_t(const FilteredPresentation& F);

struct InducedStructure {
  PoissonStructure structure;  ///< graded by the filtration weights, verified
  std::optional<long> t;       ///< nullopt: commutative input, zero bracket
  std::string note;
};

/// {x_i, x_j} := component of [y_i, y_j] of degree m_i + m_j − t. The result
/// carries the filtration weights as its grading and has bracket degree −t.
/// Throws StructureError if the extracted bracket fails Jacobi.
InducedStructure induced_gr_poisson(const FilteredPresentation& F);

}  // namespace phk
