#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "phk/error.hpp"
#include "phk/lincomb.hpp"
#include "phk/poly.hpp"

namespace phk {

/// Element of A^{⊗Arity}, stored as a combination of pure tensors of
/// monomials. All factors live over the same n variables.
template <std::size_t Arity>
class Tensor {
 public:
  using Key = std::array<Monomial, Arity>;
  using Terms = LinComb<Key>;

  Tensor() = default;
  explicit Tensor(std::size_t nvars) : nvars_(nvars) {}

  /// f_1 ⊗ ... ⊗ f_Arity.
  static Tensor pure(const std::array<Poly, Arity>& factors) {
    std::size_t n = factors[0].nvars();
    for (const auto& f : factors) {
      if (f.nvars() != n) throw StructureError("tensor factors over different rings");
    }
    Tensor out(n);
    Key key;
    out.expand(factors, 0, key, Rational(1));
    return out;
  }

  static Tensor one(std::size_t nvars) {
    Tensor t(nvars);
    Key key;
    key.fill(Monomial(nvars));
    t.terms_.add_term(key, Rational(1));
    return t;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const typename Terms::Map& terms() const noexcept { return terms_.terms(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  Rational coefficient(const Key& k) const { return terms_.coefficient(k); }

  void add_term(const Key& key, const Rational& c) {
    for (const auto& m : key) {
      if (m.nvars() != nvars_) throw StructureError("tensor key has wrong number of variables");
    }
    terms_.add_term(key, c);
  }

  Tensor& operator+=(const Tensor& o) {
    require_same(o);
    terms_ += o.terms_;
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same(o);
    terms_ -= o.terms_;
    return *this;
  }
  Tensor& operator*=(const Rational& c) {
    terms_ *= c;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rational& c) { return a *= c; }
  friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }

  /// Componentwise product (a⊗b)(c⊗d) = ac⊗bd.
  friend Tensor operator*(const Tensor& u, const Tensor& v) {
    u.require_same(v);
    Tensor out(u.nvars_);
    for (const auto& [ku, cu] : u.terms()) {
      for (const auto& [kv, cv] : v.terms()) {
        Key k;
        for (std::size_t i = 0; i < Arity; ++i) k[i] = ku[i] * kv[i];
        out.terms_.add_term(std::move(k), cu * cv);
      }
    }
    return out;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  void require_same(const Tensor& o) const {
    if (nvars_ != o.nvars_) {
      throw StructureError("tensors over " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                           " variables");
    }
  }

  void expand(const std::array<Poly, Arity>& factors, std::size_t slot, Key& key, const Rational& c) {
    if (slot == Arity) {
      terms_.add_term(key, c);
      return;
    }
    for (const auto& [m, coef] : factors[slot].terms()) {
      key[slot] = m;
      expand(factors, slot + 1, key, c * coef);
    }
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using TensorPoly = Tensor<2>;
using TensorPoly3 = Tensor<3>;

inline TensorPoly tensor(const Poly& a, const Poly& b) { return TensorPoly::pure({a, b}); }
inline TensorPoly3 tensor(const Poly& a, const Poly& b, const Poly& c) { return TensorPoly3::pure({a, b, c}); }

inline TensorPoly tensor_mul(const TensorPoly& u, const TensorPoly& v) { return u * v; }

}  // namespace phk
