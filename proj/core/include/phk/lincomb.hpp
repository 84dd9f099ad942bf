#pragma once

#include <map>
#include <utility>

#include "phk/rational.hpp"

namespace phk {

/// Finite formal sum Σ c_k · key_k with exact coefficients. Zero
/// coefficients are never stored, so two combinations are equal exactly when
/// their maps are equal.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Rational>;

  LinComb() = default;

  void add_term(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_term(Key&& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Adds c · other.
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add_term(k, c * v);
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, v] : other.terms_) add_term(k, v);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, v] : other.terms_) add_term(k, -v);
    return *this;
  }

  LinComb& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Map terms_;
};

}  // namespace phk
