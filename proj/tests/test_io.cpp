#include "doctest.h"

#include "phk/catalog.hpp"
#include "phk/error.hpp"
#include "phk/expr.hpp"
#include "phk/random.hpp"
#include "phk/spec_io.hpp"
#include "phk/suite.hpp"
#include "support.hpp"

using namespace phk;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> abczw{"a", "b", "c", "z", "w"};

std::size_t parse_error_position(const std::string& text, const std::vector<std::string>& names) {
  try {
    parse_poly_expr(text, names);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for '" << text << "'");
  return 0;
}

std::string input_error(const std::string& json) {
  try {
    algebra_from_json(json);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_poly_expr examples") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  CHECK(parse_poly_expr("x*y", xy) == x * y);
  Poly c = Poly::variable(5, 2);
  CHECK(parse_poly_expr("1/3*c^3", abczw) == Rational(1, 3) * c * c * c);
  CHECK(parse_poly_expr("x^2 - 1", xy) == x * x - Poly::constant(2, 1));
  CHECK(parse_poly_expr(" - ( x + y ) ^ 2 ", xy) == -((x + y) * (x + y)));
  CHECK(parse_poly_expr("-3/6", xy) == Poly::constant(2, Rational(-1, 2)));
  CHECK(parse_poly_expr("x^0", xy) == Poly::constant(2, 1));
  CHECK(parse_poly_expr("2^3", xy) == Poly::constant(2, 8));
}

TEST_CASE("parse_poly_expr errors carry positions") {
  CHECK(parse_error_position("x + q", xy) == 4);
  CHECK(parse_error_position("1/0", xy) == 2);
  CHECK(parse_error_position("x y", xy) == 2);
  CHECK(parse_error_position("x^-1", xy) == 2);
  CHECK(parse_error_position("(x + y", xy) == 6);
  CHECK(parse_error_position("", xy) == 0);
  CHECK(parse_error_position("x +", xy) == 3);
}

TEST_CASE("parse_tensor_expr examples") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1), one = Poly::constant(2, 1);
  CHECK(parse_tensor_expr("x@1 + y@x", xy) == tensor(x, one) + tensor(y, x));
  CHECK(parse_tensor_expr("1@1", xy) == TensorPoly::one(2));
  Poly a = Poly::variable(5, 0), c = Poly::variable(5, 2), z = Poly::variable(5, 3), u = Poly::constant(5, 1);
  CHECK(parse_tensor_expr("z@1 + 1@z + a@c + c@a", abczw) == tensor(z, u) + tensor(u, z) + tensor(a, c) + tensor(c, a));
  CHECK(parse_tensor_expr("(x+1)@y - 2*y@x^2", xy) == tensor(x + one, y) - Rational(2) * tensor(y, x * x));
  CHECK_THROWS_AS(parse_tensor_expr("x + y", xy), ParseError);
  CHECK_THROWS_AS(parse_tensor_expr("x@y@x", xy), ParseError);
  CHECK_THROWS_AS(parse_tensor_expr("x@", xy), ParseError);
}

TEST_CASE("format and parse round trip") {
  Rng rng(61);
  for (int trial = 0; trial < 64; ++trial) {
    Poly p = random_poly(rng, 5, 4, 5);
    CHECK(parse_poly_expr(format_poly(p, abczw), abczw) == p);
    TensorPoly t = random_tensor(rng, 5, 3, 3);
    CHECK(parse_tensor_expr(format_tensor(t, abczw), abczw) == t);
  }
  CHECK(format_poly(Poly(2), xy) == "0");
  CHECK(format_tensor(TensorPoly(2), xy) == "0");
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("x_1"));
  CHECK(is_identifier("_a"));
  CHECK_FALSE(is_identifier("1x"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-b"));
}

TEST_CASE("catalog exports round trip") {
  SuiteOptions o;
  o.trials = 4;
  for (const auto& e : catalog_all()) {
    CAPTURE(e.name);
    std::string text = to_json(e);
    CatalogEntry back = entry_from_json(text);
    CHECK(to_json(back) == text);
    if (e.algebra) {
      CHECK(back.algebra->structure == e.algebra->structure);
      CHECK(back.algebra->coalgebra().delta == e.algebra->coalgebra().delta);
    }
    if (e.presentation) CHECK(*back.presentation == *e.presentation);
    CHECK(report_to_json(run_suite(back, o)) == report_to_json(run_suite(e, o)));
  }
}

TEST_CASE("reports are deterministic") {
  SuiteOptions o;
  o.trials = 16;
  o.envelope_window = 4;
  o.homology_window = 3;
  CatalogEntry e = catalog_get("grouplike_bialgebra");
  CHECK(report_to_json(run_suite(e, o)) == report_to_json(run_suite(e, o)));
  o.seed = 7;
  CHECK(report_to_text(run_suite(e, o)) == report_to_text(run_suite(e, o)));
}

TEST_CASE("minimal algebra file") {
  PoissonHopfAlgebra H = algebra_from_json(R"({"variables": ["x", "y"], "bracket": {"x,y": "x*y"}})");
  CHECK(H.nvars() == 2);
  CHECK(H.structure.entry(1, 0) == -(Poly::variable(2, 0) * Poly::variable(2, 1)));
  CHECK_FALSE(H.structure.grading().has_value());
  CHECK_FALSE(H.coalg.has_value());

  PoissonHopfAlgebra G = algebra_from_json(R"({"variables": ["x", "y"], "weights": [1, 1],
    "bracket": {"x,y": "x*y"}, "coproduct": {"x": "x@1 + y@x", "y": "y@y"}, "counit": {"y": "1"}})");
  CHECK(G.coalgebra().counit == std::vector<Rational>{0, 1});
}

TEST_CASE("malformed algebra files") {
  CHECK(input_error("{").find("JSON") != std::string::npos);
  CHECK(input_error("[]") != "");
  CHECK(input_error(R"({"bracket": {}})").find("variables") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x", "x"]})").find("x") != std::string::npos);
  CHECK(input_error(R"({"variables": ["1x"]})") != "");
  CHECK(input_error(R"({"variables": ["x", "y"], "weights": [1]})").find("weights") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x", "y"], "weights": [1, 0]})") != "");
  CHECK(input_error(R"({"variables": ["x", "y"], "bracket": {"y,x": "x"}})").find("y,x") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x", "y"], "bracket": {"x,q": "x"}})").find("x,q") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x", "y"], "bracket": {"x,y": "x +* y"}})").find("position") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x", "y"], "bracket": {"x,y": true}})") != "");
  CHECK(input_error(R"({"variables": ["x", "y"], "coproduct": {"x": "x@1 + 1@x"}})").find("y") != std::string::npos);
  CHECK(input_error(R"({"variables": ["x"], "coproduct": {"x": "x@1 + 1@x"}, "counit": {"x": "x"}})") != "");
  CHECK(input_error(R"({"variables": ["x", "y"], "coproduct": {"x": "x@1 + 1@x", "y": "y@1 + 1@y"},
    "antipode": {"x": "-x"}})") != "");
  CHECK(input_error(R"({"variables": ["x"], "colour": "red"})").find("colour") != std::string::npos);
  CHECK_THROWS_AS(presentation_from_json(R"({"variables": ["x"], "filtration_weights": [0]})"), InputError);
  CHECK_THROWS_AS(read_text_file("/nonexistent/phk/file.json"), InputError);
}
