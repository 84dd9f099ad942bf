#include "doctest.h"

#include "phk/error.hpp"
#include "phk/monomial.hpp"
#include "phk/poly.hpp"
#include "phk/random.hpp"
#include "phk/tensor.hpp"
#include "support.hpp"

using namespace phk;
using phk::test::P;
using phk::test::T;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> abczw{"a", "b", "c", "z", "w"};
}  // namespace

TEST_CASE("poly_mul examples") {
  CHECK(P("x", xy) * P("y", xy) == P("x*y", xy));
  CHECK(P("x+1", xy) * P("x-1", xy) == P("x^2-1", xy));
  CHECK(P("1/3*c^2", abczw) * P("c", abczw) == P("1/3*c^3", abczw));
  CHECK((P("x*y", xy) * Poly(2)).is_zero());
}

TEST_CASE("poly_diff examples") {
  CHECK(P("x*y", xy).diff(1) == P("x", xy));
  CHECK(P("1/3*c^3", abczw).diff(2) == P("c^2", abczw));
  CHECK(P("7/2", xy).diff(0).is_zero());
}

TEST_CASE("weighted_degree examples") {
  CHECK(weighted_degree(P("c^3", abczw), Grading({1, 1, 1, 2, 2})) == 3);
  CHECK(weighted_degree(P("z", abczw), Grading({1, 1, 2, 3, 3})) == 3);
  CHECK_FALSE(weighted_degree(Poly(5), Grading({1, 1, 2, 3, 3})).has_value());
  CHECK(weighted_low_degree(P("x^3 + y", xy), Grading({1, 2})) == 2);
}

TEST_CASE("homogeneous_component examples") {
  Poly lx = P("3*x + 2*y", xy);
  CHECK(homogeneous_component(P("3*x + 2*y + x^2", xy), Grading({1, 1}), 1) == lx);
  CHECK(homogeneous_component(P("3*x + 2*y + x^2", xy), Grading({1, 1}), 5).is_zero());
  CHECK(homogeneous_component(P("c^3 + z", abczw), Grading({1, 1, 1, 2, 2}), 3) == P("c^3", abczw));
  CHECK(is_homogeneous(P("c^3 + a*z", abczw), Grading({1, 1, 1, 2, 2})));
}

TEST_CASE("grading rejects weights below one") {
  CHECK_THROWS_AS(Grading({1, 0}), GradingError);
  CHECK_THROWS_AS(Grading({-1}), GradingError);
}

TEST_CASE("mixing rings is a structural error") {
  CHECK_THROWS_AS(Poly::variable(2, 0) + Poly::variable(3, 0), StructureError);
  CHECK_THROWS_AS(Poly::variable(2, 0) * Poly::variable(3, 0), StructureError);
  CHECK_THROWS_AS(tensor(Poly::variable(2, 0), Poly::variable(3, 0)), StructureError);
}

TEST_CASE("tensor_mul examples") {
  CHECK(T("x@1", xy) * T("y@y", xy) == T("x*y@y", xy));
  CHECK(T("x@1 + y@x", xy) * T("y@y", xy) == T("x*y@y + y^2@x*y", xy));
  TensorPoly u = T("3*x@y^2 - 1/2*y@1", xy);
  CHECK(u * TensorPoly::one(2) == u);
}

TEST_CASE("monomials_of_degree counts") {
  std::vector<int> w{1, 1, 2, 3, 3};
  // Generating function Π 1/(1−t^{w_i}) computed by hand-rolled series product.
  std::vector<long> series(12, 0);
  series[0] = 1;
  for (int wi : w) {
    for (std::size_t s = static_cast<std::size_t>(wi); s < series.size(); ++s) series[s] += series[s - static_cast<std::size_t>(wi)];
  }
  for (long s = 0; s < 12; ++s) {
    auto ms = monomials_of_degree(w, s);
    CHECK(static_cast<long>(ms.size()) == series[static_cast<std::size_t>(s)]);
    for (const auto& m : ms) CHECK(m.weighted_degree(w) == s);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(11);
  for (int trial = 0; trial < 64; ++trial) {
    Poly f = random_poly(rng, 3, 3, 4), g = random_poly(rng, 3, 3, 4), h = random_poly(rng, 3, 3, 4);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Poly(3));
    auto pt = test::random_point(rng, 3);
    CHECK(test::eval(f * g + h, pt) == test::eval(f, pt) * test::eval(g, pt) + test::eval(h, pt));
    CHECK(f.evaluate(pt) == test::eval(f, pt));
  }
}

TEST_CASE("diff is a derivation") {
  Rng rng(12);
  for (int trial = 0; trial < 64; ++trial) {
    Poly f = random_poly(rng, 3, 4, 4), g = random_poly(rng, 3, 4, 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK((f * g).diff(i) == f * g.diff(i) + f.diff(i) * g);
  }
}

TEST_CASE("homogeneous decomposition and degree additivity") {
  Rng rng(13);
  Grading w({1, 2, 3});
  for (int trial = 0; trial < 64; ++trial) {
    Poly f = random_poly(rng, 3, 4, 5), g = random_poly(rng, 3, 4, 5);
    Poly sum(3);
    if (auto top = weighted_degree(f, w)) {
      for (long s = 0; s <= *top; ++s) sum += homogeneous_component(f, w, s);
    }
    CHECK(sum == f);
    if (!f.is_zero() && !g.is_zero()) CHECK(*weighted_degree(f * g, w) == *weighted_degree(f, w) + *weighted_degree(g, w));
  }
}

TEST_CASE("substitute and pow") {
  Poly f = P("x^2*y - y", xy);
  std::vector<Poly> images{P("x+y", xy), P("2", xy)};
  CHECK(f.substitute(images) == P("2*(x+y)^2 - 2", xy));
  CHECK(P("x+y", xy).pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", xy));
  CHECK(P("x", xy).pow(0) == Poly::constant(2, 1));
}
