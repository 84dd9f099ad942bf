#include "phk/poisson.hpp"

#include <string>

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

PoissonStructure::PoissonStructure(std::vector<std::string> names, std::optional<Grading> grading)
    : names_(std::move(names)), table_(names_.size() * names_.size(), Poly(names_.size())) {
  set_grading(std::move(grading));
}

const Poly& PoissonStructure::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = nvars();
  if (i >= n || j >= n) throw StructureError("bracket index out of range");
  return table_[i * n + j];
}

void PoissonStructure::set_bracket(std::size_t i, std::size_t j, Poly p) {
  const std::size_t n = nvars();
  if (i >= n || j >= n) throw StructureError("bracket index out of range");
  if (i == j) throw StructureError("{x_i, x_i} is always zero and cannot be set");
  if (p.nvars() != n) throw StructureError("structure polynomial over the wrong number of variables");
  table_[j * n + i] = -p;
  table_[i * n + j] = std::move(p);
  verified_ = false;
}

bool PoissonStructure::is_zero() const {
  for (const auto& p : table_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

void PoissonStructure::set_grading(std::optional<Grading> g) {
  if (g && g->size() != nvars()) throw GradingError("grading has the wrong number of weights");
  grading_ = std::move(g);
}

CheckResult PoissonStructure::verify() {
  JacobiReport rep = validate_poisson(*this);
  CheckResult out{"jacobi"};
  for (const auto& f : rep.failures) {
    out.fail("J(" + names_[f.i] + "," + names_[f.j] + "," + names_[f.k] + ") = " + format_poly(f.value, names_));
  }
  verified_ = rep.passed();
  return out;
}

std::optional<std::size_t> PoissonStructure::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Poly Derivation::apply(const Poly& f) const {
  if (images.size() != f.nvars()) throw StructureError("derivation and polynomial disagree on variable count");
  Poly out(f.nvars());
  for (std::size_t m = 0; m < images.size(); ++m) {
    if (images[m].is_zero()) continue;
    out += f.diff(m) * images[m];
  }
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& p : images) {
    if (!p.is_zero()) return false;
  }
  return true;
}

Derivation Derivation::scaled(const Rational& c) const {
  Derivation out{images};
  for (auto& p : out.images) p *= c;
  return out;
}

namespace {

void require_vars(const PoissonStructure& P, const Poly& f) {
  if (f.nvars() != P.nvars()) {
    throw StructureError("polynomial over " + std::to_string(f.nvars()) + " variables used with a bracket on " +
                         std::to_string(P.nvars()));
  }
}

}  // namespace

Poly bracket(const PoissonStructure& P, const Poly& f, const Poly& g) {
  require_vars(P, f);
  require_vars(P, g);
  const std::size_t n = P.nvars();
  Poly out(n);
  if (f.is_zero() || g.is_zero()) return out;
  std::vector<Poly> df, dg;
  df.reserve(n);
  dg.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.diff(i));
    dg.push_back(g.diff(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& p = P.entry(i, j);
      if (p.is_zero()) continue;
      Poly cross = df[i] * dg[j] - df[j] * dg[i];
      if (!cross.is_zero()) out += p * cross;
    }
  }
  return out;
}

Poly hamiltonian(const PoissonStructure& P, std::size_t i, const Poly& f) {
  require_vars(P, f);
  Poly out(P.nvars());
  for (std::size_t j = 0; j < P.nvars(); ++j) {
    const Poly& p = P.entry(i, j);
    if (p.is_zero()) continue;
    Poly d = f.diff(j);
    if (!d.is_zero()) out += p * d;
  }
  return out;
}

Poly jacobiator(const PoissonStructure& P, const Poly& f, const Poly& g, const Poly& h) {
  return bracket(P, f, bracket(P, g, h)) + bracket(P, g, bracket(P, h, f)) + bracket(P, h, bracket(P, f, g));
}

JacobiReport validate_poisson(const PoissonStructure& P) {
  const std::size_t n = P.nvars();
  JacobiReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // {x_i,{x_j,x_k}} = hamiltonian(i, p_jk), and cyclically.
        Poly J = hamiltonian(P, i, P.entry(j, k)) + hamiltonian(P, j, P.entry(k, i)) +
                 hamiltonian(P, k, P.entry(i, j));
        if (!J.is_zero()) rep.failures.push_back({i, j, k, std::move(J)});
      }
    }
  }
  return rep;
}

long BracketDegree::effective() const {
  if (kind == Kind::NotHomogeneous) throw GradingError("bracket is not homogeneous");
  return kind == Kind::Any ? 0 : d;
}

std::string BracketDegree::to_string() const {
  switch (kind) {
    case Kind::Homogeneous: return std::to_string(d);
    case Kind::Any: return "any";
    case Kind::NotHomogeneous: return "not homogeneous";
  }
  return "?";
}

BracketDegree bracket_degree(const PoissonStructure& P) {
  if (!P.grading()) throw GradingError("bracket_degree requires a grading");
  const Grading& w = *P.grading();
  std::optional<long> found;
  const std::size_t n = P.nvars();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Poly& p = P.entry(i, j);
      if (p.is_zero()) continue;
      if (!is_homogeneous(p, w)) return {BracketDegree::Kind::NotHomogeneous, 0};
      long d = *weighted_degree(p, w) - w[i] - w[j];
      if (found && *found != d) return {BracketDegree::Kind::NotHomogeneous, 0};
      found = d;
    }
  }
  if (!found) return {BracketDegree::Kind::Any, 0};
  return {BracketDegree::Kind::Homogeneous, *found};
}

TensorPoly tensor_bracket(const PoissonStructure& P, const TensorPoly& u, const TensorPoly& v) {
  const std::size_t n = P.nvars();
  if (u.nvars() != n || v.nvars() != n) throw StructureError("tensor operands over the wrong number of variables");
  TensorPoly out(n);
  for (const auto& [ku, cu] : u.terms()) {
    Poly a = Poly::term(ku[0], Rational(1));
    Poly b = Poly::term(ku[1], Rational(1));
    for (const auto& [kv, cv] : v.terms()) {
      Poly c = Poly::term(kv[0], Rational(1));
      Poly d = Poly::term(kv[1], Rational(1));
      Rational coef = cu * cv;
      Poly ac_br = bracket(P, a, c);
      if (!ac_br.is_zero()) out += tensor(ac_br, b * d) * coef;
      Poly bd_br = bracket(P, b, d);
      if (!bd_br.is_zero()) out += tensor(a * c, bd_br) * coef;
    }
  }
  return out;
}

ModularDerivation modular_derivation(const PoissonStructure& P) {
  if (!P.verified()) throw UnverifiedError("modular_derivation requires a verified Poisson structure");
  const std::size_t n = P.nvars();
  ModularDerivation out;
  out.delta.images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly img(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      img += P.entry(i, j).diff(j);
    }
    out.delta.images.push_back(std::move(img));
  }
  out.unimodular = out.delta.is_zero();
  return out;
}

DerivationCheck check_poisson_derivation(const PoissonStructure& P, const Derivation& tau) {
  const std::size_t n = P.nvars();
  if (tau.images.size() != n) throw StructureError("derivation has the wrong number of images");
  DerivationCheck rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly lhs = tau.apply(P.entry(i, j));
      Poly rhs = bracket(P, tau.images[i], Poly::variable(n, j)) + bracket(P, Poly::variable(n, i), tau.images[j]);
      if (lhs != rhs) rep.failures.push_back({i, j});
    }
  }
  return rep;
}

}  // namespace phk
