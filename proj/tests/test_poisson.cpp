#include "doctest.h"

#include "phk/catalog.hpp"
#include "phk/error.hpp"
#include "phk/poisson.hpp"
#include "phk/random.hpp"
#include "support.hpp"

using namespace phk;
using phk::test::P;
using phk::test::T;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> abczw{"a", "b", "c", "z", "w"};

PoissonStructure make(const std::vector<std::string>& names, std::vector<std::tuple<int, int, std::string>> entries,
                      std::optional<Grading> g = std::nullopt) {
  PoissonStructure S(names, std::move(g));
  for (const auto& [i, j, e] : entries) S.set_bracket(static_cast<std::size_t>(i), static_cast<std::size_t>(j), P(e, names));
  return S;
}

PoissonStructure xy_bracket() {
  auto S = make(xy, {{0, 1, "x*y"}}, Grading({1, 1}));
  REQUIRE(S.verify().passed());
  return S;
}

PoissonStructure unitriangular(std::vector<int> w) {
  auto S = make(abczw, {{0, 1, "c"}, {3, 4, "1/3*c^3"}}, Grading(std::move(w)));
  REQUIRE(S.verify().passed());
  return S;
}

/// δ(f) = Σ_j ∂{f, x_j}/∂x_j straight from the definition, through `bracket`.
Poly delta_by_definition(const PoissonStructure& S, const Poly& f) {
  Poly out(S.nvars());
  for (std::size_t j = 0; j < S.nvars(); ++j) out += bracket(S, f, Poly::variable(S.nvars(), j)).diff(j);
  return out;
}

}  // namespace

TEST_CASE("bracket examples") {
  auto S = xy_bracket();
  CHECK(bracket(S, P("x", xy), P("y", xy)) == P("x*y", xy));
  CHECK(bracket(S, P("x^2", xy), P("y", xy)) == P("2*x^2*y", xy));
  Poly f = P("x^3 - 2*x*y + 5", xy);
  CHECK(bracket(S, f, f).is_zero());
  CHECK(hamiltonian(S, 0, P("y^2", xy)) == P("2*x*y^2", xy));
}

TEST_CASE("validate_poisson examples") {
  CHECK(validate_poisson(xy_bracket()).passed());

  auto heis = make(xyz, {{0, 1, "y"}, {0, 2, "z"}, {1, 2, "-1/2*y^2"}});
  CHECK(validate_poisson(heis).passed());

  auto bad = make(xyz, {{0, 1, "y"}, {1, 2, "z"}, {2, 0, "x"}});
  JacobiReport r = validate_poisson(bad);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].i == 0);
  CHECK(r.failures[0].j == 1);
  CHECK(r.failures[0].k == 2);
  CHECK(r.failures[0].value == P("-x-y-z", xyz));
  CHECK_FALSE(bad.verify().passed());
  CHECK_FALSE(bad.verified());
}

TEST_CASE("verification mark is cleared by edits") {
  auto S = xy_bracket();
  CHECK(S.verified());
  S.set_bracket(0, 1, P("x", xy));
  CHECK_FALSE(S.verified());
  CHECK_THROWS_AS(modular_derivation(S), UnverifiedError);
}

TEST_CASE("bracket table is antisymmetric") {
  auto S = make(xyz, {{2, 0, "x + y"}});
  CHECK(S.entry(0, 2) == P("-x-y", xyz));
  CHECK(S.entry(1, 1).is_zero());
  CHECK_THROWS_AS(S.set_bracket(1, 1, P("x", xyz)), StructureError);
}

TEST_CASE("bracket_degree examples") {
  CHECK(bracket_degree(xy_bracket()) == BracketDegree{BracketDegree::Kind::Homogeneous, 0});
  CHECK(bracket_degree(unitriangular({1, 1, 2, 3, 3})) == BracketDegree{BracketDegree::Kind::Homogeneous, 0});
  CHECK(bracket_degree(unitriangular({1, 1, 1, 2, 2})) == BracketDegree{BracketDegree::Kind::Homogeneous, -1});

  auto sl2 = kostant_souriau(lie_sl2()).algebra->structure;
  CHECK(bracket_degree(sl2) == BracketDegree{BracketDegree::Kind::Homogeneous, -1});

  auto zero = make(xy, {}, Grading({1, 3}));
  CHECK(bracket_degree(zero).kind == BracketDegree::Kind::Any);
  CHECK(bracket_degree(zero).nonnegative());

  auto mixed = make(xy, {{0, 1, "x + x*y"}}, Grading({1, 1}));
  CHECK(bracket_degree(mixed).kind == BracketDegree::Kind::NotHomogeneous);
  auto two_shifts = make(xyz, {{0, 1, "z"}, {0, 2, "y^2"}}, Grading({1, 1, 1}));
  CHECK(bracket_degree(two_shifts).kind == BracketDegree::Kind::NotHomogeneous);

  CHECK_THROWS_AS(bracket_degree(make(xy, {{0, 1, "x"}})), GradingError);
}

TEST_CASE("tensor_bracket examples") {
  auto S = xy_bracket();
  CHECK(tensor_bracket(S, T("x@1", xy), T("1@y", xy)).is_zero());
  TensorPoly u = T("x@y + 2*y^2@x", xy);
  CHECK(tensor_bracket(S, u, u).is_zero());

  auto U = unitriangular({1, 1, 1, 2, 2});
  CHECK(tensor_bracket(U, T("a@c", abczw), T("b@c", abczw)) == T("c@c^2", abczw));
}

TEST_CASE("modular_derivation examples") {
  auto m = modular_derivation(xy_bracket());
  CHECK(m.delta.images == std::vector<Poly>{P("x", xy), P("-y", xy)});
  CHECK_FALSE(m.unimodular);

  auto grB = make(xyz, {{0, 1, "y"}, {2, 0, "-z"}, {2, 1, "1/2*y^2"}});
  REQUIRE(grB.verify().passed());
  auto mb = modular_derivation(grB);
  CHECK(mb.delta.images == std::vector<Poly>{P("2", xyz), P("0", xyz), P("y", xyz)});

  CHECK(modular_derivation(unitriangular({1, 1, 2, 3, 3})).unimodular);

  auto zero = make(xyz, {});
  REQUIRE(zero.verify().passed());
  CHECK(modular_derivation(zero).delta.is_zero());
}

TEST_CASE("check_poisson_derivation examples") {
  auto S = xy_bracket();
  CHECK(check_poisson_derivation(S, modular_derivation(S).delta).passed());
  CHECK(check_poisson_derivation(S, Derivation{{Poly(2), Poly(2)}}).passed());
  DerivationCheck bad = check_poisson_derivation(S, Derivation{{P("y", xy), Poly(2)}});
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0] == std::array<std::size_t, 2>{0, 1});
}

TEST_CASE("properties over verified catalog structures") {
  Rng rng(21);
  for (const auto& e : catalog_all()) {
    if (!e.algebra) continue;
    PoissonStructure S = e.algebra->structure;
    REQUIRE(S.verify().passed());
    const std::size_t n = S.nvars();
    auto m = modular_derivation(S);
    CAPTURE(e.name);
    CHECK(check_poisson_derivation(S, m.delta).passed());
    for (int trial = 0; trial < 16; ++trial) {
      Poly f = random_poly(rng, n, 3, 3), g = random_poly(rng, n, 3, 3), h = random_poly(rng, n, 2, 3);
      CHECK(bracket(S, f, g) == -bracket(S, g, f));
      CHECK(bracket(S, f * g, h) == f * bracket(S, g, h) + bracket(S, f, h) * g);
      CHECK(jacobiator(S, f, g, h).is_zero());
      CHECK(m.delta.apply(f) == delta_by_definition(S, f));
      CHECK(delta_by_definition(S, f * g) == f * delta_by_definition(S, g) + delta_by_definition(S, f) * g);
    }
    if (S.grading()) {
      BracketDegree d = bracket_degree(S);
      if (d.kind != BracketDegree::Kind::Homogeneous) continue;
      for (int trial = 0; trial < 16; ++trial) {
        long i = rng.uniform(0, 5), j = rng.uniform(0, 5);
        Poly f = random_homogeneous(rng, *S.grading(), i, 3), g = random_homogeneous(rng, *S.grading(), j, 3);
        Poly b = bracket(S, f, g);
        if (!b.is_zero()) {
          CHECK(is_homogeneous(b, *S.grading()));
          CHECK(*weighted_degree(b, *S.grading()) == i + j + d.d);
        }
      }
    }
  }
}
