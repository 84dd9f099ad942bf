#include "phk/homology.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "phk/error.hpp"
#include "phk/linalg.hpp"

namespace phk {

template <class Tag>
void Alternating<Tag>::add(Subset I, const Poly& f) {
  if (std::popcount(I) != k_) throw StructureError("subset size does not match the exterior degree");
  if (f.nvars() != nvars_) throw StructureError("coefficient over the wrong number of variables");
  if (f.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(I, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

template class Alternating<PolyVectorTag>;
template class Alternating<DiffFormTag>;

namespace {

constexpr Subset bit(std::size_t i) { return Subset{1} << i; }

std::vector<std::size_t> elements(Subset S) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; S != 0; ++i, S >>= 1) {
    if (S & 1u) out.push_back(i);
  }
  return out;
}

/// Sign of moving index m to its sorted place in front of R.
int insertion_sign(std::size_t m, Subset R) { return (std::popcount(R & (bit(m) - 1)) % 2) ? -1 : 1; }

int parity_sign(std::size_t a) { return (a % 2) ? -1 : 1; }

void require_verified(const PoissonStructure& P) {
  if (!P.verified()) throw UnverifiedError("Poisson (co)homology requires a verified Poisson structure");
}

}  // namespace

PolyVector lichnerowicz_d(const PoissonStructure& P, const PolyVector& Q) {
  require_verified(P);
  const std::size_t n = P.nvars();
  if (Q.nvars() != n) throw StructureError("polyvector over the wrong number of variables");
  const int k = Q.degree();
  PolyVector out(n, k + 1);
  if (Q.is_zero() || k + 1 > static_cast<int>(n)) return out;

  for (Subset J = 0; J < bit(n); ++J) {
    if (std::popcount(J) != k + 1) continue;
    auto js = elements(J);
    Poly acc(n);
    for (std::size_t a = 0; a < js.size(); ++a) {
      Poly f = Q.coefficient(J ^ bit(js[a]));
      if (f.is_zero()) continue;
      Poly h = hamiltonian(P, js[a], f);
      if (parity_sign(a) < 0) h = -h;
      acc += h;
    }
    for (std::size_t a = 0; a < js.size(); ++a) {
      for (std::size_t b = a + 1; b < js.size(); ++b) {
        const Poly& p = P.entry(js[a], js[b]);
        if (p.is_zero()) continue;
        Subset rest = J ^ bit(js[a]) ^ bit(js[b]);
        for (std::size_t m = 0; m < n; ++m) {
          if (rest & bit(m)) continue;
          Poly coef = Q.coefficient(rest | bit(m));
          if (coef.is_zero()) continue;
          Poly dp = p.diff(m);
          if (dp.is_zero()) continue;
          int sign = parity_sign(a + b) * insertion_sign(m, rest);
          acc += dp * coef * Rational(sign);
        }
      }
    }
    out.add(J, acc);
  }
  return out;
}

DiffForm brylinski_boundary(const PoissonStructure& P, const DiffForm& omega) {
  require_verified(P);
  const std::size_t n = P.nvars();
  if (omega.nvars() != n) throw StructureError("form over the wrong number of variables");
  const int k = omega.degree();
  DiffForm out(n, k - 1);
  if (k == 0) return out;

  for (const auto& [I, f] : omega.coeffs()) {
    auto is = elements(I);
    for (std::size_t a = 0; a < is.size(); ++a) {
      // (−1)^{j+1} with j = a + 1, and {f, x_i} = −{x_i, f}.
      Poly term = hamiltonian(P, is[a], f);
      if (parity_sign(a) > 0) term = -term;
      out.add(I ^ bit(is[a]), term);
    }
    for (std::size_t a = 0; a < is.size(); ++a) {
      for (std::size_t b = a + 1; b < is.size(); ++b) {
        const Poly& p = P.entry(is[a], is[b]);
        if (p.is_zero()) continue;
        Subset R = I ^ bit(is[a]) ^ bit(is[b]);
        for (std::size_t m = 0; m < n; ++m) {
          if (R & bit(m)) continue;
          Poly dp = p.diff(m);
          if (dp.is_zero()) continue;
          int sign = parity_sign(a + b) * insertion_sign(m, R);
          out.add(R | bit(m), f * dp * Rational(sign));
        }
      }
    }
  }
  return out;
}

namespace {

using BasisKey = std::pair<Subset, Monomial>;

class StrandComplex {
 public:
  StrandComplex(const PoissonStructure& P, HomologySide side)
      : P_(P), side_(side), w_(*P.grading()), d_(bracket_degree(P).effective()) {}

  long shift() const { return d_; }

  const std::vector<BasisKey>& basis(int k, long s) {
    auto key = std::make_pair(k, s);
    if (auto it = basis_.find(key); it != basis_.end()) return it->second;
    std::vector<BasisKey> out;
    const std::size_t n = P_.nvars();
    if (k >= 0 && k <= static_cast<int>(n)) {
      for (Subset I = 0; I < bit(n); ++I) {
        if (std::popcount(I) != k) continue;
        long wsum = 0;
        for (std::size_t i : elements(I)) wsum += w_[i];
        long coef_deg = side_ == HomologySide::Cohomology ? s + wsum : s - wsum;
        for (auto& m : monomials_of_degree(w_.weights(), coef_deg)) out.emplace_back(I, std::move(m));
      }
    }
    return basis_.emplace(key, std::move(out)).first->second;
  }

  /// Rank of the differential leaving strand (k, s).
  std::size_t rank(int k, long s) {
    auto key = std::make_pair(k, s);
    if (auto it = rank_.find(key); it != rank_.end()) return it->second;
    std::size_t r = 0;
    const int tk = side_ == HomologySide::Cohomology ? k + 1 : k - 1;
    const auto& src = basis(k, s);
    if (!P_.is_zero() && !src.empty() && tk >= 0 && tk <= static_cast<int>(P_.nvars())) {
      const auto& tgt = basis(tk, s + d_);
      std::map<BasisKey, std::size_t> index;
      for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i], i);
      std::vector<SparseRow> rows;
      rows.reserve(src.size());
      for (const auto& [I, mono] : src) rows.push_back(image_row(k, I, mono, index));
      r = exact_rank(std::move(rows));
    }
    rank_.emplace(key, r);
    return r;
  }

 private:
  template <class Elem>
  SparseRow to_row(const Elem& img, const std::map<BasisKey, std::size_t>& index) {
    std::map<std::size_t, Rational> cols;
    for (const auto& [I, f] : img.coeffs()) {
      for (const auto& [m, c] : f.terms()) {
        auto it = index.find({I, m});
        if (it == index.end()) throw std::logic_error("differential left its internal-degree strand");
        cols.emplace(it->second, c);
      }
    }
    return SparseRow(cols.begin(), cols.end());
  }

  SparseRow image_row(int k, Subset I, const Monomial& mono, const std::map<BasisKey, std::size_t>& index) {
    Poly f = Poly::term(mono, Rational(1));
    if (side_ == HomologySide::Cohomology) {
      PolyVector q(P_.nvars(), k);
      q.add(I, f);
      return to_row(lichnerowicz_d(P_, q), index);
    }
    DiffForm w(P_.nvars(), k);
    w.add(I, f);
    return to_row(brylinski_boundary(P_, w), index);
  }

  const PoissonStructure& P_;
  HomologySide side_;
  Grading w_;
  long d_;
  std::map<std::pair<int, long>, std::vector<BasisKey>> basis_;
  std::map<std::pair<int, long>, std::size_t> rank_;
};

void require_graded(const PoissonStructure& P) {
  if (!P.grading()) throw GradingError("Poisson (co)homology tables require a grading");
  if (bracket_degree(P).kind == BracketDegree::Kind::NotHomogeneous) {
    throw GradingError("Poisson (co)homology tables require a homogeneous bracket");
  }
}

long default_smin(const PoissonStructure& P, HomologySide side) {
  return side == HomologySide::Cohomology ? -P.grading()->total() : 0;
}

HpTable make_table(const PoissonStructure& P, HomologySide side, long N, std::optional<long> smin, bool homology) {
  require_verified(P);
  require_graded(P);
  HpTable t;
  t.side = side;
  t.smin = smin.value_or(default_smin(P, side));
  t.smax = N;
  const int n = static_cast<int>(P.nvars());
  StrandComplex cx(P, side);
  const long d = cx.shift();
  t.dims.assign(n + 1, {});
  for (int k = 0; k <= n; ++k) {
    for (long s = t.smin; s <= t.smax; ++s) {
      std::size_t dim = cx.basis(k, s).size();
      if (homology && dim > 0) {
        std::size_t out_rank = cx.rank(k, s);
        int in_k = side == HomologySide::Cohomology ? k - 1 : k + 1;
        std::size_t in_rank = (in_k >= 0 && in_k <= n) ? cx.rank(in_k, s - d) : 0;
        dim -= out_rank + in_rank;
      }
      t.dims[k].push_back(dim);
    }
  }
  return t;
}

}  // namespace

HpTable hp_dimensions(const PoissonStructure& P, HomologySide side, long N, std::optional<long> smin) {
  return make_table(P, side, N, smin, true);
}

HpTable chain_dimensions(const PoissonStructure& P, HomologySide side, long N, std::optional<long> smin) {
  return make_table(P, side, N, smin, false);
}

DualityReport duality_check(const PoissonStructure& P, long N) {
  require_verified(P);
  require_graded(P);
  const int n = static_cast<int>(P.nvars());
  const long total = P.grading()->total();
  DualityReport rep;
  rep.homology = hp_dimensions(P, HomologySide::Homology, N + total, 0);
  rep.cohomology = hp_dimensions(P, HomologySide::Cohomology, N, -total);
  rep.shifts.assign(n + 1, std::nullopt);

  bool inconclusive = false;
  std::vector<bool> too_small(n + 1, false);
  for (int i = 0; i <= n; ++i) {
    const auto& hom = rep.homology.dims[i];
    const auto& coh = rep.cohomology.dims[n - i];
    auto nonzero = [](const std::vector<std::size_t>& v) {
      std::size_t c = 0;
      for (auto x : v) c += x != 0;
      return c;
    };
    if (nonzero(hom) < 3 || nonzero(coh) < 3) {
      inconclusive = true;
      too_small[i] = true;
      rep.notes.push_back("i=" + std::to_string(i) + ": fewer than 3 nonzero entries in the window");
      continue;
    }
    std::optional<long> best;
    std::size_t best_overlap = 0;
    for (long sigma = rep.homology.smin - rep.cohomology.smax; sigma <= rep.homology.smax - rep.cohomology.smin;
         ++sigma) {
      std::size_t overlap = 0, nz_h = 0, nz_c = 0;
      bool match = true;
      for (long s = rep.homology.smin; s <= rep.homology.smax && match; ++s) {
        long sc = s - sigma;
        if (sc < rep.cohomology.smin || sc > rep.cohomology.smax) continue;
        std::size_t a = rep.homology.at(i, s);
        std::size_t b = rep.cohomology.at(n - i, sc);
        match = a == b;
        ++overlap;
        nz_h += a != 0;
        nz_c += b != 0;
      }
      // The aligned window must cover every nonzero entry on both sides.
      if (!match || nz_h < 3 || nz_h != nonzero(hom) || nz_c != nonzero(coh)) continue;
      if (!best || overlap > best_overlap) {
        best = sigma;
        best_overlap = overlap;
      }
    }
    rep.shifts[i] = best;
    if (!best) rep.notes.push_back("i=" + std::to_string(i) + ": no shift aligns HP_i with HP^{n-i}");
  }

  bool missing = false;
  for (int i = 0; i <= n; ++i) missing = missing || (!rep.shifts[i] && !too_small[i]);
  if (missing) {
    rep.status = Status::Fail;
  } else if (inconclusive) {
    rep.status = Status::Inconclusive;
  } else {
    rep.status = Status::Pass;
  }
  return rep;
}

}  // namespace phk
