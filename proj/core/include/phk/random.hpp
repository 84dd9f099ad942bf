#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "phk/poly.hpp"
#include "phk/tensor.hpp"

namespace phk {

/// Seeded source of small random polynomials. Uses the raw mt19937_64
/// stream (no std distributions), so a seed reproduces the same data on
/// every platform.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x70686b2d73656564ULL;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  /// p/q with |p| ≤ 5, 1 ≤ q ≤ 3, never zero.
  Rational nonzero_rational();

 private:
  std::mt19937_64 engine_;
};

/// Up to max_terms terms of total degree ≤ max_degree (may be zero).
Poly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms);

/// Up to max_terms terms of weighted degree exactly `degree`; zero when no
/// monomial has that degree.
Poly random_homogeneous(Rng& rng, const Grading& w, long degree, std::size_t max_terms);

/// Sum of up to max_terms pure tensors of random polynomials.
TensorPoly random_tensor(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms);

}  // namespace phk
