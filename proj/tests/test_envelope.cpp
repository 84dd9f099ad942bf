#include "doctest.h"

#include <algorithm>
#include <map>

#include "phk/catalog.hpp"
#include "phk/envelope.hpp"
#include "phk/error.hpp"
#include "phk/linalg.hpp"
#include "phk/random.hpp"
#include "support.hpp"

using namespace phk;
using phk::test::P;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> abczw{"a", "b", "c", "z", "w"};

PoissonStructure verified(const CatalogEntry& e) {
  PoissonStructure S = e.algebra->structure;
  REQUIRE(S.verify().passed());
  return S;
}

UElement m(const std::string& f, const std::vector<std::string>& names) { return UElement::m(P(f, names)); }

UElement random_u(Rng& rng, std::size_t n) {
  UElement u(n);
  auto terms = rng.uniform(1, 3);
  for (long t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> a(n, 0), b(n, 0);
    for (long k = rng.uniform(0, 2); k > 0; --k) ++a[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];
    for (long k = rng.uniform(0, 2); k > 0; --k) ++b[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];
    u += UElement::basis(Monomial(a), Monomial(b), rng.nonzero_rational());
  }
  return u;
}

/// dim U(A)_s as the rank of every word in the generators m_{x_i}, h_{x_i}
/// of total degree s, reduced to normal form by the multiplication under
/// test. Independent of the PBW product formula.
std::vector<std::size_t> hilbert_by_words(const PoissonStructure& S, long d, int N) {
  EnvelopeAlgebra U(S);
  const std::size_t n = S.nvars();
  const Grading& w = *S.grading();
  std::vector<std::pair<UElement, long>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.emplace_back(UElement::m(Poly::variable(n, i)), w[i]);
    gens.emplace_back(UElement::h(n, i), w[i] + d);
  }
  std::vector<std::vector<UElement>> by_degree(static_cast<std::size_t>(N) + 1);
  by_degree[0].push_back(UElement::one(n));
  for (int s = 1; s <= N; ++s) {
    for (const auto& [g, gd] : gens) {
      if (gd > s) continue;
      for (const auto& u : by_degree[static_cast<std::size_t>(s - gd)]) by_degree[static_cast<std::size_t>(s)].push_back(U.multiply(g, u));
    }
  }
  std::vector<std::size_t> dims;
  for (const auto& words : by_degree) {
    std::map<UElement::Key, std::size_t> column;
    std::vector<SparseRow> rows;
    for (const auto& u : words) {
      SparseRow row;
      for (const auto& [k, c] : u.terms()) {
        auto [it, fresh] = column.try_emplace(k, column.size());
        row.emplace_back(it->second, c);
      }
      std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      rows.push_back(std::move(row));
    }
    dims.push_back(exact_rank(std::move(rows)));
  }
  return dims;
}

}  // namespace

TEST_CASE("expand_h examples") {
  auto S = verified(grouplike_bialgebra(1));
  CHECK(expand_h(S, P("x^2", xy)) == UElement::basis(Monomial({1, 0}), Monomial({1, 0}), 2));
  CHECK(expand_h(S, P("1", xy)).is_zero());
  auto U = verified(unitriangular5(true));
  CHECK(expand_h(U, P("c^3", abczw)) == UElement::basis(Monomial({0, 0, 2, 0, 0}), Monomial({0, 0, 1, 0, 0}), 3));
}

TEST_CASE("u_mul examples") {
  auto S = verified(grouplike_bialgebra(1));
  UElement hx = UElement::h(2, 0), hy = UElement::h(2, 1);
  CHECK(u_mul(S, hx, m("y", xy)) == u_mul(S, m("y", xy), hx) + m("x*y", xy));
  CHECK(u_mul(S, m("y", xy), hx) == UElement::basis(Monomial({0, 1}), Monomial({1, 0})));
  CHECK(u_mul(S, m("x", xy), m("y", xy)) == m("x*y", xy));
  UElement expected = UElement::basis(Monomial({0, 0}), Monomial({1, 1})) -
                      UElement::basis(Monomial({0, 1}), Monomial({1, 0})) -
                      UElement::basis(Monomial({1, 0}), Monomial({0, 1}));
  CHECK(u_mul(S, hy, hx) == expected);
  CHECK(u_mul(S, hx, hy) == UElement::basis(Monomial({0, 0}), Monomial({1, 1})));
}

TEST_CASE("envelope requires a verified bracket") {
  PoissonStructure S = grouplike_bialgebra(1).algebra->structure;
  S.set_bracket(0, 1, S.entry(0, 1));
  CHECK_THROWS_AS(EnvelopeAlgebra{S}, UnverifiedError);
}

TEST_CASE("u_degree examples") {
  auto S = verified(grouplike_bialgebra(1));
  CHECK(u_degree(S, UElement::basis(Monomial({1, 0}), Monomial({0, 1}))) == 2);
  CHECK(u_degree(S, UElement::one(2)) == 0);
  CHECK_FALSE(u_degree(S, UElement(2)).has_value());
  CHECK_THROWS_AS(u_degree(S, UElement::one(2) + UElement::h(2, 0)), GradingError);
  auto U = verified(unitriangular5(false));
  CHECK(u_degree(U, UElement::h(5, 3)) == 3);
  auto C = verified(unitriangular5(true));
  CHECK(u_degree(C, UElement::h(5, 3)) == 1);
}

TEST_CASE("u_hilbert examples") {
  auto S = verified(grouplike_bialgebra(1));
  HilbertReport h = u_hilbert(S, 4);
  CHECK(h.dims == std::vector<Integer>{1, 4, 10, 20, 35});

  auto U = verified(unitriangular5(false));
  HilbertReport hu = u_hilbert(U, 10);
  CHECK(hu.dims[0] == 1);
  CHECK(hu.dims[1] == 4);

  auto C = verified(unitriangular5(true));
  CHECK_THROWS_AS(u_hilbert(C, 4), GradingError);
}

TEST_CASE("u_hilbert agrees with the rank of all generator words") {
  for (const CatalogEntry& e : {grouplike_bialgebra(1), unitriangular5(false), zero_bracket(2, {1, 2})}) {
    auto S = verified(e);
    CAPTURE(e.name);
    const int N = 5;
    HilbertReport h = u_hilbert(S, N);
    auto words = hilbert_by_words(S, bracket_degree(S).effective(), N);
    for (int s = 0; s <= N; ++s) CHECK(h.dims[static_cast<std::size_t>(s)] == Integer(static_cast<unsigned long>(words[static_cast<std::size_t>(s)])));
  }
}

TEST_CASE("Hilbert growth evidence") {
  auto S = verified(grouplike_bialgebra(1));
  HilbertReport h = u_hilbert(S, 12);
  REQUIRE(h.gk_evidence.has_value());
  CHECK(*h.gk_evidence == 4);
  CHECK(h.growth_exponent == 3);
}

TEST_CASE("extend_poisson_derivation examples") {
  auto S = verified(grouplike_bialgebra(1));
  Derivation two_delta = modular_derivation(S).delta.scaled(2);
  CHECK(two_delta.images == std::vector<Poly>{P("2*x", xy), P("-2*y", xy)});
  NakayamaReport r = extend_poisson_derivation(S, two_delta);
  CHECK(r.well_defined);
  CHECK_FALSE(r.identity);

  NakayamaReport zero = extend_poisson_derivation(S, Derivation{{Poly(2), Poly(2)}});
  CHECK(zero.well_defined);
  CHECK(zero.identity);

  auto U = verified(unitriangular5(false));
  NakayamaReport u = extend_poisson_derivation(U, modular_derivation(U).delta.scaled(2));
  CHECK(u.well_defined);
  CHECK(u.identity);

  CHECK_THROWS_AS(extend_poisson_derivation(S, Derivation{{P("y", xy), Poly(2)}}), StructureError);
}

TEST_CASE("envelope properties on random elements") {
  Rng rng(41);
  for (const auto& e : catalog_all()) {
    if (!e.algebra) continue;
    auto S = verified(e);
    const std::size_t n = S.nvars();
    EnvelopeAlgebra U(S);
    CAPTURE(e.name);
    for (int trial = 0; trial < 6; ++trial) {
      UElement a = random_u(rng, n), b = random_u(rng, n), c = random_u(rng, n);
      CHECK(U.multiply(U.multiply(a, b), c) == U.multiply(a, U.multiply(b, c)));

      Poly f = random_poly(rng, n, 3, 3), g = random_poly(rng, n, 3, 3);
      CHECK(U.expand_h(f * g) == U.multiply(UElement::m(g), U.expand_h(f)) + U.multiply(UElement::m(f), U.expand_h(g)));

      auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
      UElement hi = UElement::h(n, i), hj = UElement::h(n, j);
      CHECK(U.multiply(hi, hj) - U.multiply(hj, hi) == U.expand_h(S.entry(i, j)));
      CHECK(U.multiply(hi, UElement::m(f)) - U.multiply(UElement::m(f), hi) == UElement::m(hamiltonian(S, i, f)));
    }
  }
}

TEST_CASE("expand_h does not depend on how a monomial is split") {
  auto S = verified(unitriangular5(true));
  EnvelopeAlgebra U(S);
  Poly f = P("a^2*c*z", abczw);
  // h_{uv} = m_u h_v + m_v h_u for every split of the monomial.
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{{"a", "a*c*z"}, {"a^2", "c*z"}, {"c", "a^2*z"}, {"a*z", "a*c"}}) {
    Poly pu = P(u, abczw), pv = P(v, abczw);
    CHECK(U.expand_h(f) == U.multiply(UElement::m(pu), U.expand_h(pv)) + U.multiply(UElement::m(pv), U.expand_h(pu)));
  }
}

TEST_CASE("degree is additive under multiplication") {
  Rng rng(42);
  auto S = verified(unitriangular5(false));
  const Grading& w = *S.grading();
  EnvelopeAlgebra U(S);
  for (int trial = 0; trial < 16; ++trial) {
    long s = rng.uniform(1, 4), t = rng.uniform(1, 4);
    UElement a = UElement::m(random_homogeneous(rng, w, s, 2));
    UElement b = U.expand_h(random_homogeneous(rng, w, t, 2));
    UElement ab = U.multiply(b, a);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(u_degree(S, ab) == *u_degree(S, a) + *u_degree(S, b));
  }
}
