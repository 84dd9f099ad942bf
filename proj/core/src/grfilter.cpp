#include "phk/grfilter.hpp"

#include <string>

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

FilteredPresentation::FilteredPresentation(std::vector<std::string> names, std::vector<int> filtration_weights)
    : names_(std::move(names)), weights_(std::move(filtration_weights)), table_(names_.size() * names_.size(), Poly(names_.size())) {
  if (weights_.size() != names_.size()) throw StructureError("one filtration weight per generator is required");
}

const Poly& FilteredPresentation::commutator(std::size_t i, std::size_t j) const {
  const std::size_t n = nvars();
  if (i >= n || j >= n) throw StructureError("commutator index out of range");
  return table_[i * n + j];
}

void FilteredPresentation::set_commutator(std::size_t i, std::size_t j, Poly c) {
  const std::size_t n = nvars();
  if (i >= n || j >= n) throw StructureError("commutator index out of range");
  if (i == j) throw StructureError("[y_i, y_i] is always zero and cannot be set");
  if (c.nvars() != n) throw StructureError("commutator over the wrong number of variables");
  table_[j * n + i] = -c;
  table_[i * n + j] = std::move(c);
}

std::optional<long> filtration_degree(const Poly& p, const Grading& weights) { return weighted_degree(p, weights); }

std::optional<long> compute_t(const FilteredPresentation& F) {
  const Grading& m = F.weights();
  std::optional<long> t;
  for (std::size_t i = 0; i < F.nvars(); ++i) {
    for (std::size_t j = i + 1; j < F.nvars(); ++j) {
      auto level = filtration_degree(F.commutator(i, j), m);
      if (!level) continue;
      long gap = m[i] + m[j] - *level;
      if (!t || gap < *t) t = gap;
    }
  }
  if (t && F.connected && *t < 1) {
    throw StructureError("filtration gap t = " + std::to_string(*t) +
                         " < 1; a connected Hopf filtration always has t >= 1");
  }
  return t;
}

InducedStructure induced_gr_poisson(const FilteredPresentation& F) {
  const std::size_t n = F.nvars();
  InducedStructure out{PoissonStructure(F.names(), F.weights()), compute_t(F), {}};
  if (!out.t) {
    out.note = "all commutators vanish; the induced bracket is zero";
  } else {
    const Grading& m = F.weights();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Poly top = homogeneous_component(F.commutator(i, j), m, m[i] + m[j] - *out.t);
        if (!top.is_zero()) out.structure.set_bracket(i, j, std::move(top));
      }
    }
  }
  CheckResult jac = out.structure.verify();
  if (jac.failed()) {
    throw StructureError("induced bracket violates Jacobi: " + jac.witnesses.front());
  }
  return out;
}

}  // namespace phk
