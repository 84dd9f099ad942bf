#include "phk/poly.hpp"

#include <string>

#include "phk/error.hpp"

namespace phk {

Grading::Grading(std::vector<int> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1) {
      throw GradingError("grading weight of generator " + std::to_string(i + 1) + " is " +
                         std::to_string(weights_[i]) + "; weights must be >= 1");
    }
  }
}

long Grading::total() const noexcept {
  long s = 0;
  for (int w : weights_) s += w;
  return s;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.terms_.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw StructureError("variable index " + std::to_string(i) + " out of range");
  Poly p(nvars);
  p.terms_.add_term(Monomial::variable(nvars, i), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.nvars());
  p.terms_.add_term(m, c);
  return p;
}

Rational Poly::constant_term() const { return terms_.coefficient(Monomial(nvars_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw StructureError("monomial has wrong number of variables");
  terms_.add_term(m, c);
}

void Poly::require_same(const Poly& other) const {
  if (nvars_ != other.nvars_) {
    throw StructureError("polynomials over " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same(other);
  terms_ += other.terms_;
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same(other);
  terms_ -= other.terms_;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same(b);
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.terms_.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  terms_ *= c;
  return *this;
}

Poly Poly::diff(std::size_t i) const {
  if (i >= nvars_) throw StructureError("derivative index " + std::to_string(i) + " out of range");
  Poly out(nvars_);
  for (const auto& [m, c] : terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    out.terms_.add_term(std::move(dm), c * m[i]);
  }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> values) const {
  if (values.size() != nvars_) throw StructureError("evaluate: wrong number of values");
  Rational total(0);
  for (const auto& [m, c] : terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_ && t != 0; ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= values[i];
    }
    total += t;
  }
  return total;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw StructureError("substitute: wrong number of images");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target) throw StructureError("substitute: images over different rings");
  }
  Poly out(target);
  for (const auto& [m, c] : terms()) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) t *= images[i].pow(m[i]);
    }
    out += t;
  }
  return out;
}

std::optional<long> weighted_degree(const Poly& f, const Grading& w) {
  if (w.size() != f.nvars()) throw StructureError("grading size does not match variable count");
  std::optional<long> best;
  for (const auto& [m, c] : f.terms()) {
    long d = m.weighted_degree(w.weights());
    if (!best || d > *best) best = d;
  }
  return best;
}

std::optional<long> weighted_low_degree(const Poly& f, const Grading& w) {
  if (w.size() != f.nvars()) throw StructureError("grading size does not match variable count");
  std::optional<long> best;
  for (const auto& [m, c] : f.terms()) {
    long d = m.weighted_degree(w.weights());
    if (!best || d < *best) best = d;
  }
  return best;
}

Poly homogeneous_component(const Poly& f, const Grading& w, long s) {
  if (w.size() != f.nvars()) throw StructureError("grading size does not match variable count");
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.weighted_degree(w.weights()) == s) out.add_term(m, c);
  }
  return out;
}

bool is_homogeneous(const Poly& f, const Grading& w) {
  return weighted_degree(f, w) == weighted_low_degree(f, w);
}

}  // namespace phk
