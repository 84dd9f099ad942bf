#include "phk/random.hpp"

namespace phk {

long Rng::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::nonzero_rational() {
  long p = uniform(1, 5) * (uniform(0, 1) ? 1 : -1);
  long q = uniform(1, 3);
  return Rational(p) / Rational(q);
}

Poly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  Poly out(nvars);
  auto terms = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(nvars, 0);
    auto deg = static_cast<unsigned>(rng.uniform(0, max_degree));
    for (unsigned k = 0; k < deg && nvars > 0; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nvars) - 1))];
    out += Poly::term(Monomial(std::move(e)), rng.nonzero_rational());
  }
  return out;
}

Poly random_homogeneous(Rng& rng, const Grading& w, long degree, std::size_t max_terms) {
  Poly out(w.size());
  auto basis = monomials_of_degree(w.weights(), degree);
  if (basis.empty()) return out;
  auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    const Monomial& m = basis[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(basis.size()) - 1))];
    out += Poly::term(m, rng.nonzero_rational());
  }
  return out;
}

TensorPoly random_tensor(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  TensorPoly out(nvars);
  auto terms = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    out += tensor(random_poly(rng, nvars, max_degree, 2), random_poly(rng, nvars, max_degree, 2));
  }
  return out;
}

}  // namespace phk
