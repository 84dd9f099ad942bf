#include "doctest.h"

#include <algorithm>

#include "phk/catalog.hpp"
#include "phk/error.hpp"
#include "phk/suite.hpp"
#include "support.hpp"

using namespace phk;
using phk::test::P;
using phk::test::T;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

bool expected_failure(const CatalogEntry& e, const std::string& check) {
  const auto& f = e.expected.failing_checks;
  return std::find(f.begin(), f.end(), check) != f.end();
}

}  // namespace

TEST_CASE("grouplike bialgebra entry") {
  CatalogEntry e = catalog_get("grouplike_bialgebra", {{"i", "1"}});
  const auto& H = *e.algebra;
  CHECK(H.structure.entry(0, 1) == P("x*y", xy));
  CHECK(H.coalgebra().delta[0] == T("x@1 + y@x", xy));
  CHECK(H.coalgebra().delta[1] == T("y@y", xy));
  CHECK_FALSE(H.coalgebra().antipode.has_value());
  REQUIRE(e.expected.delta);
  CHECK(e.expected.delta->value == std::vector<Poly>{P("x", xy), P("-y", xy)});
  CHECK(e.expected.delta->source == Source::Published);
  CHECK(e.expected.unimodular->value == false);

  CHECK(catalog_get("grouplike_bialgebra", {{"i", "3"}}).algebra->coalgebra().delta[0] == T("x@1 + y^3@x", xy));
  CHECK_THROWS_AS(catalog_get("grouplike_bialgebra", {{"i", "-1"}}), InputError);
}

TEST_CASE("grA entry") {
  CatalogEntry e = catalog_get("grA", {});
  CHECK(e.expected.delta->value == std::vector<Poly>{Poly(3), Poly(3), P("2", xyz)});
  CHECK(e.expected.t->value == 2);
  CHECK(e.metadata.count("isomorphism_classes") == 1);

  CatalogEntry zero = grA(0, 0, 0);
  CHECK_FALSE(zero.expected.t->value.has_value());
  CHECK(zero.expected.degree->value.kind == BracketDegree::Kind::Any);

  auto classes = grA_classes(Rational(2));
  CHECK(classes.size() == 6);
  CHECK(std::find(classes.begin(), classes.end(), std::array<Rational, 3>{1, Rational(1, 2), 0}) != classes.end());
  CHECK_THROWS_AS(catalog_get("grA", {{"alpha", "2"}}), InputError);
}

TEST_CASE("grB entry") {
  CatalogEntry e = catalog_get("grB", {{"lambda", "7/3"}});
  CHECK(e.expected.delta->value == std::vector<Poly>{P("2", xyz), Poly(3), P("y", xyz)});
  CHECK(e.presentation->commutator(2, 0) == P("-z + 7/3*y", xyz));
  CHECK(e.expected.induced->value.entry(2, 0) == P("-z", xyz));
}

TEST_CASE("Kostant-Souriau entries") {
  LieAlgebra g = lie_nonabelian2();
  // tr ad(x_i) from the raw constants: Σ_k c[i][k][k].
  std::vector<Rational> traces(g.names.size(), 0);
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    for (std::size_t k = 0; k < g.names.size(); ++k) traces[i] += g.c[i][k][k];
  }
  CHECK(traces == std::vector<Rational>{1, 0});
  CatalogEntry e = kostant_souriau(g, "nonabelian2");
  CHECK(e.expected.delta->value == std::vector<Poly>{P("1", xy), Poly(2)});
  CHECK(e.expected.delta->source == Source::HandDerived);
  CHECK(e.expected.degree->value == BracketDegree{BracketDegree::Kind::Homogeneous, -1});

  CatalogEntry h = catalog_get("kostant_souriau", {{"lie", "heisenberg3"}});
  for (const auto& p : h.expected.delta->value) CHECK(p.is_zero());

  CatalogEntry custom = catalog_get("kostant_souriau", {{"names", "h,e,f"}, {"brackets", "h,e=2*e; h,f=-2*f; e,f=h"}});
  CHECK(custom.algebra->structure.entry(0, 1) == P("2*e", {"h", "e", "f"}));

  LieAlgebra bad({"x", "y", "z"});
  bad.set(0, 1, {0, 1, 0});
  bad.set(1, 2, {0, 0, 1});
  bad.set(2, 0, {1, 0, 0});
  CHECK_FALSE(bad.jacobi_failures().empty());
  CHECK_THROWS_AS(kostant_souriau(bad), StructureError);
  CHECK_THROWS_AS(catalog_get("kostant_souriau", {{"names", "x,y,z"}, {"brackets", "x,y=y; y,z=z; z,x=x"}}),
                  StructureError);
}

TEST_CASE("unitriangular entries") {
  CatalogEntry d0 = catalog_get("unitriangular5_degree0");
  CHECK(d0.algebra->structure.grading() == Grading({1, 1, 2, 3, 3}));
  CHECK(d0.expected.degree->value == BracketDegree{BracketDegree::Kind::Homogeneous, 0});
  CHECK(d0.expected.unimodular->value);
  CatalogEntry cr = catalog_get("unitriangular5_coradical");
  CHECK(cr.algebra->structure.grading() == Grading({1, 1, 1, 2, 2}));
  CHECK(cr.expected.degree->value == BracketDegree{BracketDegree::Kind::Homogeneous, -1});
  CHECK(cr.expected.t->value == 1);
}

TEST_CASE("catalog lookup errors") {
  CHECK_THROWS_AS(catalog_get("no_such_entry"), InputError);
  CHECK_THROWS_AS(catalog_get("grB", {{"mu", "1"}}), InputError);
  CHECK_THROWS_AS(catalog_get("grB", {{"lambda", "1/0"}}), InputError);
  CHECK_THROWS_AS(catalog_get("zero_bracket", {{"n", "2"}, {"weights", "1,1,1"}}), InputError);
  CHECK_THROWS_AS(catalog_get("kostant_souriau", {{"lie", "e8"}}), InputError);
  for (const auto& name : catalog_names()) CHECK_NOTHROW(catalog_get(name));
}

TEST_CASE("every entry reproduces its expected values") {
  SuiteOptions o;
  o.trials = 8;
  for (const auto& e : catalog_all()) {
    CAPTURE(e.name);
    SuiteReport r = run_suite(e, o);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      if (expected_failure(e, c.name)) {
        CHECK(c.failed());
      } else {
        CHECK_FALSE(c.failed());
      }
    }
    CHECK_FALSE(r.theorem_violation);
  }
}

TEST_CASE("source labels") {
  CHECK(to_string(Source::Published) == "published");
  CHECK(to_string(Source::HandDerived) == "hand-derived");
  CHECK(to_string(Source::Trivial) == "trivial");
}
