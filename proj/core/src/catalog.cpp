#include "phk/catalog.hpp"

#include <set>
#include <string_view>

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

std::string to_string(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::HandDerived: return "hand-derived";
    case Source::Trivial: return "trivial";
  }
  return "?";
}

LieAlgebra::LieAlgebra(std::vector<std::string> n) : names(std::move(n)) {
  const std::size_t d = names.size();
  c.assign(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
}

void LieAlgebra::set(std::size_t i, std::size_t j, std::vector<Rational> coeffs) {
  const std::size_t d = names.size();
  if (i >= d || j >= d || i == j) throw StructureError("Lie bracket indices out of range or equal");
  if (coeffs.size() != d) throw StructureError("Lie bracket needs one coefficient per basis element");
  for (std::size_t k = 0; k < d; ++k) c[j][i][k] = -coeffs[k];
  c[i][j] = std::move(coeffs);
}

std::vector<std::array<std::size_t, 3>> LieAlgebra::jacobi_failures() const {
  const std::size_t d = names.size();
  // [[x_a, x_b], x_e] as a coefficient vector.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t e) {
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t m = 0; m < d; ++m) {
      if (c[a][b][m] == 0) continue;
      for (std::size_t l = 0; l < d; ++l) out[l] += c[a][b][m] * c[m][e][l];
    }
    return out;
  };
  std::vector<std::array<std::size_t, 3>> bad;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        auto u = nested(i, j, k), v = nested(j, k, i), w = nested(k, i, j);
        for (std::size_t l = 0; l < d; ++l) {
          if (u[l] + v[l] + w[l] != 0) {
            bad.push_back({i, j, k});
            break;
          }
        }
      }
    }
  }
  return bad;
}

Rational LieAlgebra::trace_ad(std::size_t i) const {
  Rational t(0);
  for (std::size_t k = 0; k < names.size(); ++k) t += c[i][k][k];
  return t;
}

LieAlgebra lie_nonabelian2() {
  LieAlgebra g({"x", "y"});
  g.set(0, 1, {Rational(0), Rational(1)});
  return g;
}

LieAlgebra lie_heisenberg3() {
  LieAlgebra g({"x", "y", "z"});
  g.set(0, 1, {Rational(0), Rational(0), Rational(1)});
  return g;
}

LieAlgebra lie_sl2() {
  LieAlgebra g({"h", "e", "f"});
  g.set(0, 1, {Rational(0), Rational(2), Rational(0)});
  g.set(0, 2, {Rational(0), Rational(0), Rational(-2)});
  g.set(1, 2, {Rational(1), Rational(0), Rational(0)});
  return g;
}

namespace {

struct Builder {
  std::vector<std::string> names;

  Poly p(std::string_view s) const { return parse_poly_expr(s, names); }
  TensorPoly t(std::string_view s) const { return parse_tensor_expr(s, names); }
  std::size_t idx(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return i;
    }
    throw StructureError("unknown generator " + n);
  }

  PoissonStructure structure(std::vector<int> weights,
                             std::initializer_list<std::pair<std::pair<const char*, const char*>, Poly>> brackets) const {
    PoissonStructure P(names, Grading(std::move(weights)));
    for (const auto& [ij, v] : brackets) P.set_bracket(idx(ij.first), idx(ij.second), v);
    CheckResult r = P.verify();
    if (!r.passed()) throw StructureError("catalog bracket fails Jacobi: " + r.witnesses.front());
    return P;
  }

  FilteredPresentation presentation(std::vector<int> weights,
                                    std::initializer_list<std::pair<std::pair<const char*, const char*>, Poly>> comms) const {
    FilteredPresentation F(names, std::move(weights));
    for (const auto& [ij, v] : comms) F.set_commutator(idx(ij.first), idx(ij.second), v);
    return F;
  }

  std::vector<Poly> polys(std::initializer_list<const char*> xs) const {
    std::vector<Poly> out;
    for (const char* x : xs) out.push_back(p(x));
    return out;
  }
};

std::string rat(const Rational& q) { return to_string(q); }

BracketDegree homogeneous(long d) { return {BracketDegree::Kind::Homogeneous, d}; }
BracketDegree any_degree() { return {BracketDegree::Kind::Any, 0}; }

/// H(λ) families share x, y primitive and Δz = z⊗1 + 1⊗z + x⊗y.
CoalgebraData heisenberg_coalgebra(const Builder& b) {
  CoalgebraData c;
  c.delta = {b.t("x@1 + 1@x"), b.t("y@1 + 1@y"), b.t("z@1 + 1@z + x@y")};
  c.counit = {Rational(0), Rational(0), Rational(0)};
  c.antipode = b.polys({"-x", "-y", "-z + x*y"});
  return c;
}

}  // namespace

CatalogEntry unitriangular5(bool coradical_grading) {
  Builder b{{"a", "b", "c", "z", "w"}};
  std::vector<int> weights = coradical_grading ? std::vector<int>{1, 1, 1, 2, 2} : std::vector<int>{1, 1, 2, 3, 3};
  CatalogEntry e;
  e.name = coradical_grading ? "unitriangular5_coradical" : "unitriangular5_degree0";
  e.params["weights"] = coradical_grading ? "1,1,1,2,2" : "1,1,2,3,3";

  PoissonHopfAlgebra H;
  H.structure = b.structure(weights, {{{"a", "b"}, b.p("c")}, {{"z", "w"}, b.p("1/3*c^3")}});
  CoalgebraData c;
  c.delta = {b.t("a@1 + 1@a"), b.t("b@1 + 1@b"), b.t("c@1 + 1@c"), b.t("z@1 + 1@z + a@c - c@a"),
             b.t("w@1 + 1@w + b@c - c@b")};
  c.counit.assign(5, Rational(0));
  c.antipode = b.polys({"-a", "-b", "-c", "-z", "-w"});
  H.coalg = std::move(c);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);

  e.expected.delta = {{std::vector<Poly>(5, Poly(5)), Source::Published}};
  e.expected.unimodular = {{true, Source::Published}};
  e.expected.degree = {{homogeneous(coradical_grading ? -1 : 0), Source::Published}};
  if (coradical_grading) {
    e.presentation = b.presentation({1, 1, 1, 2, 2}, {{{"a", "b"}, b.p("c")}, {{"z", "w"}, b.p("1/3*c^3")}});
    e.expected.t = {{1L, Source::HandDerived}};
    e.expected.induced = {{e.algebra->structure, Source::Published}};
  }
  e.metadata["realization"] = "O(U), U = unitriangular 4x4 matrices modulo the centre";
  e.metadata["coproduct_signs"] =
      "mixed terms antisymmetric (a@c - c@a, b@c - c@b); the symmetric choice is not a Poisson map";
  return e;
}

CatalogEntry grouplike_bialgebra(unsigned i) {
  Builder b{{"x", "y"}};
  CatalogEntry e;
  e.name = "grouplike_bialgebra";
  e.params["i"] = std::to_string(i);

  PoissonHopfAlgebra H;
  H.structure = b.structure({1, 1}, {{{"x", "y"}, b.p("x*y")}});
  Poly x = b.p("x"), y = b.p("y"), one = b.p("1");
  CoalgebraData c;
  c.delta = {tensor(x, one) + tensor(y.pow(i), x), tensor(y, y)};
  c.counit = {Rational(0), Rational(1)};
  H.coalg = std::move(c);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);

  e.expected.delta = {{b.polys({"x", "-y"}), Source::Published}};
  e.expected.unimodular = {{false, Source::Published}};
  e.expected.degree = {{homogeneous(0), Source::Published}};
  e.expected.failing_checks = {"graded_connected"};
  return e;
}

CatalogEntry kostant_souriau(const LieAlgebra& g, const std::string& label) {
  if (auto bad = g.jacobi_failures(); !bad.empty()) {
    const auto& [i, j, k] = bad.front();
    throw StructureError("Lie structure constants fail Jacobi on (" + g.names[i] + "," + g.names[j] + "," +
                         g.names[k] + ")");
  }
  const std::size_t n = g.names.size();
  CatalogEntry e;
  e.name = "kostant_souriau";
  e.params["lie"] = label;

  PoissonStructure P(g.names, Grading::standard(n));
  bool abelian = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly v(n);
      for (std::size_t k = 0; k < n; ++k) v += Poly::variable(n, k) * g.c[i][j][k];
      abelian = abelian && v.is_zero();
      P.set_bracket(i, j, std::move(v));
    }
  }
  if (!P.verify().passed()) throw StructureError("linear bracket fails Jacobi");

  PoissonHopfAlgebra H;
  H.structure = std::move(P);
  H.coalg = CoalgebraData::primitive(n);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);

  std::vector<Poly> delta;
  bool unimodular = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rational tr = g.trace_ad(i);
    unimodular = unimodular && tr == 0;
    delta.push_back(Poly::constant(n, tr));
  }
  e.expected.delta = {{std::move(delta), Source::HandDerived}};
  e.expected.unimodular = {{unimodular, Source::HandDerived}};
  e.expected.degree = {{abelian ? any_degree() : homogeneous(-1), Source::Published}};
  return e;
}

CatalogEntry grA(const Rational& lambda, const Rational& mu, int alpha) {
  if (alpha != 0 && alpha != 1) throw StructureError("grA: alpha must be 0 or 1");
  Builder b{{"x", "y", "z"}};
  CatalogEntry e;
  e.name = "grA";
  e.params = {{"lambda", rat(lambda)}, {"mu", rat(mu)}, {"alpha", std::to_string(alpha)}};
  Poly x = b.p("x"), y = b.p("y");
  Rational a(alpha);
  Poly zx = x * lambda + y * a;
  Poly zy = y * mu;

  PoissonHopfAlgebra H;
  H.structure = b.structure({1, 1, 2}, {{{"z", "x"}, zx}, {{"z", "y"}, zy}});
  H.coalg = heisenberg_coalgebra(b);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);
  e.presentation = b.presentation({1, 1, 2}, {{{"z", "x"}, zx}, {{"z", "y"}, zy}});

  const bool zero = lambda == 0 && mu == 0 && alpha == 0;
  e.expected.delta = {{{Poly(3), Poly(3), Poly::constant(3, lambda + mu)}, Source::Published}};
  e.expected.unimodular = {{lambda + mu == 0, Source::HandDerived}};
  e.expected.degree = {{zero ? any_degree() : homogeneous(-2), Source::Published}};
  e.expected.t = {{zero ? std::nullopt : std::optional<long>(2), Source::HandDerived}};
  e.expected.induced = {{e.algebra->structure, Source::Published}};
  e.metadata["isomorphism_classes"] = "(1,0,0),(0,0,0),(0,0,1),(1,1,1),(1,mu,0),(1,1/mu,0) for mu != 0";
  return e;
}

CatalogEntry grB(const Rational& lambda) {
  Builder b{{"x", "y", "z"}};
  CatalogEntry e;
  e.name = "grB";
  e.params = {{"lambda", rat(lambda)}};

  PoissonHopfAlgebra H;
  H.structure = b.structure({1, 1, 2}, {{{"x", "y"}, b.p("y")}, {{"z", "x"}, b.p("-z")}, {{"z", "y"}, b.p("1/2*y^2")}});
  H.coalg = heisenberg_coalgebra(b);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);
  e.presentation = b.presentation(
      {1, 1, 2},
      {{{"x", "y"}, b.p("y")}, {{"z", "x"}, b.p("-z") + b.p("y") * lambda}, {{"z", "y"}, b.p("1/2*y^2")}});

  e.expected.delta = {{b.polys({"2", "0", "y"}), Source::Published}};
  e.expected.unimodular = {{false, Source::Published}};
  e.expected.degree = {{homogeneous(-1), Source::Published}};
  e.expected.t = {{1L, Source::HandDerived}};
  e.expected.induced = {{e.algebra->structure, Source::Published}};
  return e;
}

CatalogEntry zero_bracket(std::size_t n, std::vector<int> weights) {
  if (weights.size() != n) throw StructureError("zero_bracket: need one weight per generator");
  std::vector<std::string> names;
  std::string wtext;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i + 1));
    wtext += (i ? "," : "") + std::to_string(weights[i]);
  }
  CatalogEntry e;
  e.name = "zero_bracket";
  e.params = {{"n", std::to_string(n)}, {"weights", wtext}};

  PoissonHopfAlgebra H;
  H.structure = PoissonStructure(names, Grading(std::move(weights)));
  H.structure.verify();
  H.coalg = CoalgebraData::primitive(n);
  H.name = e.name;
  H.params = e.params;
  e.algebra = std::move(H);

  e.expected.delta = {{std::vector<Poly>(n, Poly(n)), Source::Trivial}};
  e.expected.unimodular = {{true, Source::Trivial}};
  e.expected.degree = {{any_degree(), Source::Trivial}};
  return e;
}

std::vector<std::array<Rational, 3>> grA_classes(const Rational& mu) {
  if (mu == 0) throw StructureError("grA_classes: mu must be nonzero");
  const Rational one(1), zero(0);
  return {{one, zero, zero}, {zero, zero, zero}, {zero, zero, one}, {one, one, one},
          {one, mu, zero},   {one, Rational(1) / mu, zero}};
}

std::vector<std::string> catalog_names() {
  return {"unitriangular5_coradical", "unitriangular5_degree0", "grouplike_bialgebra", "kostant_souriau",
          "grA",                      "grB",                    "zero_bracket"};
}

namespace {

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  std::optional<std::string> get(const std::string& key) {
    used_.insert(key);
    auto it = p_.find(key);
    if (it == p_.end()) return std::nullopt;
    return it->second;
  }

  Rational rational(const std::string& key, const Rational& def) {
    auto v = get(key);
    if (!v) return def;
    try {
      return parse_rational(*v);
    } catch (const ParseError& e) {
      throw InputError("parameter " + key + ": " + e.what());
    }
  }

  long integer(const std::string& key, long def) {
    Rational q = rational(key, Rational(def));
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw InputError("parameter " + key + " must be an integer");
    return q.get_num().get_si();
  }

  void finish(const std::string& name) const {
    for (const auto& [k, v] : p_) {
      if (!used_.count(k)) throw InputError("catalog entry " + name + " has no parameter '" + k + "'");
    }
  }

 private:
  const std::map<std::string, std::string>& p_;
  std::set<std::string> used_;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t' && ch != '\n') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

LieAlgebra lie_from_text(const std::string& names_text, const std::string& brackets_text) {
  std::vector<std::string> names = split(names_text, ',');
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw InputError("kostant_souriau: invalid name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("kostant_souriau: duplicate name '" + n + "'");
  }
  LieAlgebra g(names);
  const std::size_t d = names.size();
  for (const auto& item : split(brackets_text, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("kostant_souriau: expected 'a,b=expr' in '" + item + "'");
    auto lhs = split(item.substr(0, eq), ',');
    if (lhs.size() != 2) throw InputError("kostant_souriau: expected two names before '=' in '" + item + "'");
    auto find = [&](const std::string& n) {
      for (std::size_t i = 0; i < d; ++i) {
        if (names[i] == n) return i;
      }
      throw InputError("kostant_souriau: unknown name '" + n + "'");
    };
    std::size_t i = find(lhs[0]), j = find(lhs[1]);
    if (i == j) throw InputError("kostant_souriau: bracket of a generator with itself");
    Poly v = [&] {
      try {
        return parse_poly_expr(item.substr(eq + 1), names);
      } catch (const ParseError& e) {
        throw InputError("kostant_souriau: " + std::string(e.what()));
      }
    }();
    std::vector<Rational> coeffs(d, Rational(0));
    for (const auto& [m, c] : v.terms()) {
      if (m.total_degree() != 1) throw InputError("kostant_souriau: bracket '" + item + "' is not linear");
      for (std::size_t k = 0; k < d; ++k) {
        if (m[k]) coeffs[k] = c;
      }
    }
    g.set(i, j, std::move(coeffs));
  }
  return g;
}

std::vector<int> weights_from_text(const std::string& text) {
  std::vector<int> w;
  for (const auto& s : split(text, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      w.push_back(v);
    } catch (const std::exception&) {
      throw InputError("weights: '" + s + "' is not an integer");
    }
  }
  return w;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name, const std::map<std::string, std::string>& params) {
  Params p(params);
  if (name == "unitriangular5_coradical" || name == "unitriangular5_degree0") {
    p.finish(name);
    return unitriangular5(name == "unitriangular5_coradical");
  }
  if (name == "grouplike_bialgebra") {
    long i = p.integer("i", 1);
    if (i < 0) throw InputError("grouplike_bialgebra: i must be nonnegative");
    p.finish(name);
    return grouplike_bialgebra(static_cast<unsigned>(i));
  }
  if (name == "kostant_souriau") {
    auto lie = p.get("lie");
    auto names = p.get("names");
    auto brackets = p.get("brackets");
    p.finish(name);
    if (names) {
      if (lie) throw InputError("kostant_souriau: give either lie= or names=/brackets=, not both");
      return kostant_souriau(lie_from_text(*names, brackets.value_or("")), "custom");
    }
    std::string preset = lie.value_or("nonabelian2");
    if (preset == "nonabelian2") return kostant_souriau(lie_nonabelian2(), preset);
    if (preset == "heisenberg3") return kostant_souriau(lie_heisenberg3(), preset);
    if (preset == "sl2") return kostant_souriau(lie_sl2(), preset);
    throw InputError("kostant_souriau: unknown Lie preset '" + preset + "'");
  }
  if (name == "grA") {
    Rational lambda = p.rational("lambda", Rational(1));
    Rational mu = p.rational("mu", Rational(1));
    long alpha = p.integer("alpha", 1);
    p.finish(name);
    if (alpha != 0 && alpha != 1) throw InputError("grA: alpha must be 0 or 1");
    return grA(lambda, mu, static_cast<int>(alpha));
  }
  if (name == "grB") {
    Rational lambda = p.rational("lambda", Rational(0));
    p.finish(name);
    return grB(lambda);
  }
  if (name == "zero_bracket") {
    long n = p.integer("n", 3);
    if (n < 1 || n > 16) throw InputError("zero_bracket: n must lie in 1..16");
    auto wtext = p.get("weights");
    p.finish(name);
    std::vector<int> w = wtext ? weights_from_text(*wtext) : std::vector<int>(static_cast<std::size_t>(n), 1);
    if (w.size() != static_cast<std::size_t>(n)) throw InputError("zero_bracket: need exactly n weights");
    for (int x : w) {
      if (x < 1) throw InputError("zero_bracket: weights must be positive");
    }
    return zero_bracket(static_cast<std::size_t>(n), std::move(w));
  }
  throw InputError("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out;
  out.push_back(unitriangular5(true));
  out.push_back(unitriangular5(false));
  for (unsigned i = 0; i <= 3; ++i) out.push_back(grouplike_bialgebra(i));
  out.push_back(kostant_souriau(lie_nonabelian2(), "nonabelian2"));
  out.push_back(kostant_souriau(lie_heisenberg3(), "heisenberg3"));
  out.push_back(kostant_souriau(lie_sl2(), "sl2"));
  std::set<std::array<std::string, 3>> seen;
  for (const Rational& mu : {Rational(1), Rational(2), Rational(1, 2)}) {
    for (const auto& [l, m, a] : grA_classes(mu)) {
      if (!seen.insert({rat(l), rat(m), rat(a)}).second) continue;
      out.push_back(grA(l, m, static_cast<int>(a.get_num().get_si())));
    }
  }
  for (const Rational& l : {Rational(0), Rational(1), Rational(-1), Rational(7, 3)}) out.push_back(grB(l));
  out.push_back(zero_bracket(3, {1, 1, 1}));
  out.push_back(zero_bracket(2, {1, 2}));
  return out;
}

}  // namespace phk
