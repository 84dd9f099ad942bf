#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phk/poisson.hpp"
#include "phk/report.hpp"

namespace phk {

/// Bit set of generator indices {i_1 < ... < i_k}.
using Subset = std::uint32_t;

struct PolyVectorTag {};
struct DiffFormTag {};

/// Σ_I f_I e_I over k-subsets I, where e_I is ∂_{i_1}∧...∧∂_{i_k} for
/// polyvector fields and dx_{i_1}∧...∧dx_{i_k} for differential forms.
template <class Tag>
class Alternating {
 public:
  Alternating() = default;
  Alternating(std::size_t nvars, int k) : nvars_(nvars), k_(k) {}

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return k_; }
  const std::map<Subset, Poly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Poly coefficient(Subset I) const {
    auto it = coeffs_.find(I);
    return it == coeffs_.end() ? Poly(nvars_) : it->second;
  }

  /// Adds f · e_I. Throws StructureError if |I| ≠ k or f is over the wrong ring.
  void add(Subset I, const Poly& f);

  friend bool operator==(const Alternating&, const Alternating&) = default;

 private:
  std::size_t nvars_ = 0;
  int k_ = 0;
  std::map<Subset, Poly> coeffs_;
};

using PolyVector = Alternating<PolyVectorTag>;
using DiffForm = Alternating<DiffFormTag>;

/// (dQ)(i_0..i_k) = Σ_a (−1)^a {x_{i_a}, Q(..î_a..)}
///               + Σ_{a<b} (−1)^{a+b} Q(d{x_{i_a},x_{i_b}}, ..î_a..î_b..).
PolyVector lichnerowicz_d(const PoissonStructure& P, const PolyVector& Q);

/// ∂(f dx_{i_1}∧..∧dx_{i_k}) = Σ_j (−1)^{j+1} {f, x_{i_j}} dx_{..î_j..}
///               + Σ_{j<l} (−1)^{j+l} f d{x_{i_j},x_{i_l}} ∧ dx_{..î_j..î_l..}.
DiffForm brylinski_boundary(const PoissonStructure& P, const DiffForm& omega);

enum class HomologySide { Cohomology, Homology };

/// dims[k][s − smin] for exterior degree k = 0..n and internal degree
/// s = smin..smax. Internal degree is deg f − Σ_{i∈I} d_i for f∂_I and
/// deg f + Σ_{i∈I} d_i for f dx_I.
struct HpTable {
  HomologySide side = HomologySide::Cohomology;
  long smin = 0;
  long smax = 0;
  std::vector<std::vector<std::size_t>> dims;

  std::size_t at(int k, long s) const { return dims.at(k).at(static_cast<std::size_t>(s - smin)); }
};

/// Exact per-strand dimensions. Both differentials shift internal degree by
/// the bracket degree d, so each strand is a finite complex. The default
/// window is s ≥ −Σd_i for cohomology and s ≥ 0 for homology, up to N.
/// Throws GradingError for an ungraded or inhomogeneous bracket and
/// UnverifiedError for an unverified one.
HpTable hp_dimensions(const PoissonStructure& P, HomologySide side, long N, std::optional<long> smin = std::nullopt);

/// Raw chain dimensions (no differential) over the same window.
HpTable chain_dimensions(const PoissonStructure& P, HomologySide side, long N, std::optional<long> smin = std::nullopt);

struct DualityReport {
  Status status = Status::Inconclusive;
  /// shifts[i]: σ with dim HP_i(s) = dim HP^{n−i}(s − σ), if found.
  std::vector<std::optional<long>> shifts;
  HpTable homology;
  HpTable cohomology;
  std::vector<std::string> notes;
};

/// Looks for per-degree shifts aligning HP_i with HP^{n−i}. Homology is
/// tabulated on s ∈ [0, N + Σd_i] and cohomology on s ∈ [−Σd_i, N], so both
/// sides cover the same N + Σd_i + 1 degrees above their lowest possible
/// value. A series with fewer than 3 nonzero entries makes the result
/// inconclusive.
DualityReport duality_check(const PoissonStructure& P, long N);

}  // namespace phk
