#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phk {

/// Exponent vector x_1^{e_1} ... x_n^{e_n}. The length is the ambient
/// variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_.at(i) = 1;
    return m;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

  bool is_one() const noexcept {
    for (auto e : exps_) {
      if (e != 0) return false;
    }
    return true;
  }

  std::uint64_t total_degree() const noexcept {
    std::uint64_t s = 0;
    for (auto e : exps_) s += e;
    return s;
  }

  /// Σ w_i e_i.
  long weighted_degree(std::span<const int> weights) const {
    long s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) s += static_cast<long>(weights[i]) * exps_[i];
    return s;
  }

  Monomial& operator*=(const Monomial& other) {
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// All monomials in `weights.size()` variables whose weighted degree is
/// exactly `degree`. Weights must be positive. Output order is
/// lexicographic in the exponent vectors.
std::vector<Monomial> monomials_of_degree(std::span<const int> weights, long degree);

}  // namespace phk
