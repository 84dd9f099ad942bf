#include "phk/hopf.hpp"

#include <string>

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

CoalgebraData CoalgebraData::primitive(std::size_t nvars) {
  CoalgebraData c;
  Poly one = Poly::constant(nvars, Rational(1));
  std::vector<Poly> s;
  for (std::size_t i = 0; i < nvars; ++i) {
    Poly x = Poly::variable(nvars, i);
    c.delta.push_back(tensor(x, one) + tensor(one, x));
    c.counit.emplace_back(0);
    s.push_back(-x);
  }
  c.antipode = std::move(s);
  return c;
}

const CoalgebraData& PoissonHopfAlgebra::coalgebra() const {
  if (!coalg) throw StructureError("no coalgebra data supplied for '" + name + "'");
  return *coalg;
}

void PoissonHopfAlgebra::validate_shape() const {
  const std::size_t n = nvars();
  if (!coalg) return;
  if (coalg->delta.size() != n) throw StructureError("coproduct must list one image per generator");
  if (coalg->counit.size() != n) throw StructureError("counit must list one value per generator");
  for (const auto& t : coalg->delta) {
    if (t.nvars() != n) throw StructureError("coproduct image over the wrong number of variables");
  }
  if (coalg->antipode) {
    if (coalg->antipode->size() != n) throw StructureError("antipode must list one image per generator");
    for (const auto& p : *coalg->antipode) {
      if (p.nvars() != n) throw StructureError("antipode image over the wrong number of variables");
    }
  }
}

namespace {

TensorPoly coproduct_of_monomial(const PoissonHopfAlgebra& H, const Monomial& m) {
  const std::size_t n = H.nvars();
  TensorPoly out = TensorPoly::one(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t e = 0; e < m[i]; ++e) out = out * H.coalgebra().delta[i];
  }
  return out;
}

/// (Δ⊗id)(t) and (id⊗Δ)(t) as triple tensors.
TensorPoly3 delta_left(const PoissonHopfAlgebra& H, const TensorPoly& t) {
  TensorPoly3 out(H.nvars());
  for (const auto& [k, c] : t.terms()) {
    TensorPoly d = coproduct_of_monomial(H, k[0]);
    for (const auto& [kk, cc] : d.terms()) out.add_term({kk[0], kk[1], k[1]}, c * cc);
  }
  return out;
}

TensorPoly3 delta_right(const PoissonHopfAlgebra& H, const TensorPoly& t) {
  TensorPoly3 out(H.nvars());
  for (const auto& [k, c] : t.terms()) {
    TensorPoly d = coproduct_of_monomial(H, k[1]);
    for (const auto& [kk, cc] : d.terms()) out.add_term({k[0], kk[0], kk[1]}, c * cc);
  }
  return out;
}

Rational counit_of_monomial(const PoissonHopfAlgebra& H, const Monomial& m) {
  Rational v(1);
  for (std::size_t i = 0; i < m.nvars() && v != 0; ++i) {
    for (std::uint32_t e = 0; e < m[i]; ++e) v *= H.coalgebra().counit[i];
  }
  return v;
}

}  // namespace

TensorPoly coproduct_extend(const PoissonHopfAlgebra& H, const Poly& f) {
  if (f.nvars() != H.nvars()) throw StructureError("coproduct_extend: polynomial over the wrong ring");
  TensorPoly out(H.nvars());
  for (const auto& [m, c] : f.terms()) out += coproduct_of_monomial(H, m) * c;
  return out;
}

Rational counit_extend(const PoissonHopfAlgebra& H, const Poly& f) {
  if (f.nvars() != H.nvars()) throw StructureError("counit_extend: polynomial over the wrong ring");
  return f.evaluate(H.coalgebra().counit);
}

Poly antipode_extend(const PoissonHopfAlgebra& H, const Poly& f) {
  if (!H.coalgebra().antipode) throw StructureError("no antipode supplied");
  return f.substitute(*H.coalgebra().antipode);
}

std::vector<CheckResult> check_coalgebra_axioms(const PoissonHopfAlgebra& H) {
  H.validate_shape();
  const std::size_t n = H.nvars();
  const auto& names = H.names();
  CheckResult coassoc{"coassociativity"};
  CheckResult counit_left{"counit_left"};
  CheckResult counit_right{"counit_right"};
  CheckResult antipode_left{"antipode_left"};
  CheckResult antipode_right{"antipode_right"};

  for (std::size_t i = 0; i < n; ++i) {
    const TensorPoly& d = H.coalgebra().delta[i];
    TensorPoly3 l = delta_left(H, d);
    TensorPoly3 r = delta_right(H, d);
    if (l != r) {
      coassoc.fail(names[i] + ": (Δ⊗id)Δ = " + format_tensor(l, names) + " but (id⊗Δ)Δ = " + format_tensor(r, names));
    }

    Poly x = Poly::variable(n, i);
    Poly el(n), er(n);
    for (const auto& [k, c] : d.terms()) {
      el += Poly::term(k[1], c * counit_of_monomial(H, k[0]));
      er += Poly::term(k[0], c * counit_of_monomial(H, k[1]));
    }
    if (el != x) counit_left.fail(names[i] + ": (ε⊗id)Δ = " + format_poly(el, names));
    if (er != x) counit_right.fail(names[i] + ": (id⊗ε)Δ = " + format_poly(er, names));

    if (H.coalgebra().antipode) {
      Poly expected = Poly::constant(n, H.coalgebra().counit[i]);
      Poly sl(n), sr(n);
      for (const auto& [k, c] : d.terms()) {
        sl += antipode_extend(H, Poly::term(k[0], c)) * Poly::term(k[1], Rational(1));
        sr += Poly::term(k[0], c) * antipode_extend(H, Poly::term(k[1], Rational(1)));
      }
      if (sl != expected) antipode_left.fail(names[i] + ": μ(S⊗id)Δ = " + format_poly(sl, names));
      if (sr != expected) antipode_right.fail(names[i] + ": μ(id⊗S)Δ = " + format_poly(sr, names));
    }
  }
  if (!H.coalgebra().antipode) {
    antipode_left.status = Status::Skipped;
    antipode_left.note = "no antipode supplied; at most a bialgebra";
    antipode_right.status = Status::Skipped;
    antipode_right.note = antipode_left.note;
  }
  return {coassoc, counit_left, counit_right, antipode_left, antipode_right};
}

HopfStatus classify_hopf(const std::vector<CheckResult>& axioms) {
  bool skipped = false;
  for (const auto& r : axioms) {
    if (r.failed()) return HopfStatus::Failed;
    if (r.status == Status::Skipped) skipped = true;
  }
  return skipped ? HopfStatus::BialgebraVerified : HopfStatus::HopfVerified;
}

std::string to_string(HopfStatus s) {
  switch (s) {
    case HopfStatus::HopfVerified: return "hopf verified";
    case HopfStatus::BialgebraVerified: return "bialgebra verified";
    case HopfStatus::Failed: return "failed";
  }
  return "?";
}

CheckResult check_graded_connected(const PoissonHopfAlgebra& H) {
  if (!H.structure.grading()) throw GradingError("check_graded_connected requires a grading");
  H.validate_shape();
  const Grading& w = *H.structure.grading();
  const auto& names = H.names();
  CheckResult out{"graded_connected"};
  for (std::size_t i = 0; i < H.nvars(); ++i) {
    if (H.coalgebra().counit[i] != 0) out.fail("(a) " + names[i] + ": ε = " + to_string(H.coalgebra().counit[i]) + " ≠ 0");
    for (const auto& [k, c] : H.coalgebra().delta[i].terms()) {
      long deg = k[0].weighted_degree(w.weights()) + k[1].weighted_degree(w.weights());
      if (deg != w[i]) {
        TensorPoly t(H.nvars());
        t.add_term(k, c);
        out.fail("(b) " + names[i] + ": term " + format_tensor(t, names) + " has degree " + std::to_string(deg) +
                 " ≠ " + std::to_string(w[i]));
      }
    }
    if (H.coalgebra().antipode) {
      const Poly& s = (*H.coalgebra().antipode)[i];
      auto hi = weighted_degree(s, w);
      auto lo = weighted_low_degree(s, w);
      if (hi && (*hi != w[i] || *lo != w[i])) {
        out.fail("(c) " + names[i] + ": S = " + format_poly(s, names) + " is not homogeneous of degree " +
                 std::to_string(w[i]));
      }
    }
  }
  return out;
}

CheckResult check_poisson_coproduct(const PoissonHopfAlgebra& H) {
  const PoissonStructure& P = H.structure;
  if (!P.verified()) throw UnverifiedError("check_poisson_coproduct requires a verified Poisson structure");
  H.validate_shape();
  const auto& names = H.names();
  CheckResult out{"poisson_coproduct"};
  for (std::size_t i = 0; i < H.nvars(); ++i) {
    for (std::size_t j = i + 1; j < H.nvars(); ++j) {
      const Poly& p = P.entry(i, j);
      TensorPoly lhs = coproduct_extend(H, p);
      TensorPoly rhs = tensor_bracket(P, H.coalgebra().delta[i], H.coalgebra().delta[j]);
      if (lhs != rhs) {
        out.fail("(" + names[i] + "," + names[j] + "): Δ{x_i,x_j} = " + format_tensor(lhs, names) +
                 " but {Δx_i,Δx_j} = " + format_tensor(rhs, names));
      }
      Rational e = counit_extend(H, p);
      if (e != 0) out.fail("(" + names[i] + "," + names[j] + "): ε{x_i,x_j} = " + to_string(e) + " ≠ 0");
    }
  }
  return out;
}

CheckResult check_antipode_antimorphism(const PoissonHopfAlgebra& H) {
  CheckResult out{"antipode_antimorphism"};
  if (!H.coalgebra().antipode) {
    out.status = Status::Skipped;
    out.note = "no antipode supplied";
    return out;
  }
  const PoissonStructure& P = H.structure;
  const auto& S = *H.coalgebra().antipode;
  const auto& names = H.names();
  for (std::size_t i = 0; i < H.nvars(); ++i) {
    for (std::size_t j = i + 1; j < H.nvars(); ++j) {
      Poly lhs = antipode_extend(H, P.entry(i, j));
      Poly rhs = -bracket(P, S[i], S[j]);
      if (lhs != rhs) {
        out.fail("(" + names[i] + "," + names[j] + "): S{x_i,x_j} = " + format_poly(lhs, names) +
                 " but -{Sx_i,Sx_j} = " + format_poly(rhs, names));
      }
    }
  }
  return out;
}

bool is_primitive(const PoissonHopfAlgebra& H, std::size_t i) {
  const std::size_t n = H.nvars();
  if (i >= n) throw StructureError("generator index out of range");
  Poly x = Poly::variable(n, i);
  Poly one = Poly::constant(n, Rational(1));
  return H.coalgebra().delta[i] == tensor(x, one) + tensor(one, x);
}

}  // namespace phk
