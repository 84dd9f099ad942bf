#include "phk/monomial.hpp"

#include "phk/error.hpp"

namespace phk {

namespace {

void fill(std::span<const int> weights, std::size_t var, long remaining, Monomial& current,
          std::vector<Monomial>& out) {
  if (var + 1 == weights.size()) {
    if (remaining % weights[var] == 0) {
      current[var] = static_cast<std::uint32_t>(remaining / weights[var]);
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  for (long e = 0; e * weights[var] <= remaining; ++e) {
    current[var] = static_cast<std::uint32_t>(e);
    fill(weights, var + 1, remaining - e * weights[var], current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::span<const int> weights, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (weights.empty()) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  for (int w : weights) {
    if (w < 1) throw StructureError("monomials_of_degree: weights must be positive");
  }
  Monomial current(weights.size());
  fill(weights, 0, degree, current, out);
  return out;
}

}  // namespace phk
