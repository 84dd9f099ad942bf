#include "phk/spec_io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
  return *it;
}

const json* optional_key(const json& obj, const char* key) {
  auto it = obj.find(key);
  return (it == obj.end() || it->is_null()) ? nullptr : &*it;
}

/// Rejects keys outside `allowed`, so misspelt fields do not pass silently.
void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || k == a;
    if (!known) throw InputError(where + ": unknown key \"" + k + "\"");
  }
}

std::string expression_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError(where + ": expected an expression string");
}

Poly poly_at(const json& v, const std::vector<std::string>& names, const std::string& where) {
  std::string text = expression_text(v, where);
  try {
    return parse_poly_expr(text, names);
  } catch (const ParseError& e) {
    throw InputError(where + " \"" + text + "\": " + e.what());
  }
}

TensorPoly tensor_at(const json& v, const std::vector<std::string>& names, const std::string& where) {
  std::string text = expression_text(v, where);
  try {
    return parse_tensor_expr(text, names);
  } catch (const ParseError& e) {
    throw InputError(where + " \"" + text + "\": " + e.what());
  }
}

std::vector<std::string> read_names(const json& obj, const std::string& where) {
  const json& v = require(obj, "variables", where);
  if (!v.is_array() || v.empty()) throw InputError(where + ".variables: expected a nonempty array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& x : v) {
    if (!x.is_string()) throw InputError(where + ".variables: names must be strings");
    std::string n = x.get<std::string>();
    if (!is_identifier(n)) throw InputError(where + ".variables: '" + n + "' is not a valid name");
    if (!seen.insert(n).second) throw InputError(where + ".variables: duplicate name '" + n + "'");
    names.push_back(std::move(n));
  }
  if (names.size() > 31) throw InputError(where + ".variables: at most 31 variables are supported");
  return names;
}

std::vector<int> read_weights(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw InputError(where + ": expected one integer weight per variable");
  std::vector<int> w;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > 1000000) {
      throw InputError(where + ": weights must be positive integers");
    }
    w.push_back(static_cast<int>(x.get<long long>()));
  }
  return w;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& n, const std::string& where) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == n) return i;
  }
  throw InputError(where + ": unknown variable '" + n + "'");
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// "a,b" with a declared before b.
std::pair<std::size_t, std::size_t> pair_key(const std::vector<std::string>& names, const std::string& key,
                                             const std::string& where) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
    throw InputError(where + ": key '" + key + "' must have the form \"a,b\"");
  }
  std::size_t i = index_in(names, trim(key.substr(0, comma)), where + "[\"" + key + "\"]");
  std::size_t j = index_in(names, trim(key.substr(comma + 1)), where + "[\"" + key + "\"]");
  if (i >= j) throw InputError(where + ": key '" + key + "' must name two variables in declaration order");
  return {i, j};
}

template <class Fn>
void for_pairs(const json& obj, const std::vector<std::string>& names, const std::string& where, Fn&& fn) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, v] : obj.items()) {
    auto [i, j] = pair_key(names, key, where);
    fn(i, j, poly_at(v, names, where + "[\"" + key + "\"]"));
  }
}

Source source_from(const json& v, const std::string& where) {
  std::string s = v.is_string() ? v.get<std::string>() : "";
  if (s == "published") return Source::Published;
  if (s == "hand-derived") return Source::HandDerived;
  if (s == "trivial") return Source::Trivial;
  throw InputError(where + ": unknown source '" + s + "'");
}

std::map<std::string, std::string> string_map(const json& v, const std::string& where) {
  if (!v.is_object()) throw InputError(where + ": expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, x] : v.items()) {
    if (!x.is_string()) throw InputError(where + "[\"" + k + "\"]: expected a string");
    out[k] = x.get<std::string>();
  }
  return out;
}

PoissonHopfAlgebra algebra_from(const json& j) {
  const std::string where = "algebra";
  if (!j.is_object()) throw InputError("algebra: expected a JSON object");
  reject_unknown(j,
                 {"name", "variables", "weights", "bracket", "coproduct", "counit", "antipode", "metadata", "notes",
                  "presentation", "expected"},
                 where);
  std::vector<std::string> names = read_names(j, where);
  const std::size_t n = names.size();
  std::optional<Grading> grading;
  if (const json* w = optional_key(j, "weights")) grading = Grading(read_weights(*w, n, where + ".weights"));

  PoissonHopfAlgebra H;
  H.structure = PoissonStructure(names, grading);
  if (const json* b = optional_key(j, "bracket")) {
    for_pairs(*b, names, where + ".bracket", [&](std::size_t a, std::size_t c, Poly p) {
      H.structure.set_bracket(a, c, std::move(p));
    });
  }

  const json* cop = optional_key(j, "coproduct");
  const json* cou = optional_key(j, "counit");
  const json* ant = optional_key(j, "antipode");
  if (!cop && (cou || ant)) throw InputError(where + ": counit/antipode given without a coproduct");
  if (cop) {
    if (!cop->is_object()) throw InputError(where + ".coproduct: expected an object");
    CoalgebraData c;
    std::vector<std::optional<TensorPoly>> delta(n);
    for (const auto& [k, v] : cop->items()) {
      std::size_t i = index_in(names, k, where + ".coproduct");
      delta[i] = tensor_at(v, names, where + ".coproduct[\"" + k + "\"]");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!delta[i]) throw InputError(where + ".coproduct: missing image of '" + names[i] + "'");
      c.delta.push_back(std::move(*delta[i]));
    }
    c.counit.assign(n, Rational(0));
    if (cou) {
      if (!cou->is_object()) throw InputError(where + ".counit: expected an object");
      for (const auto& [k, v] : cou->items()) {
        std::size_t i = index_in(names, k, where + ".counit");
        Poly p = poly_at(v, names, where + ".counit[\"" + k + "\"]");
        if (p.terms().size() > 1 || (p.terms().size() == 1 && !p.terms().begin()->first.is_one())) {
          throw InputError(where + ".counit[\"" + k + "\"]: counit values must be constants");
        }
        c.counit[i] = p.constant_term();
      }
    }
    if (ant) {
      if (!ant->is_object()) throw InputError(where + ".antipode: expected an object");
      std::vector<std::optional<Poly>> s(n);
      for (const auto& [k, v] : ant->items()) {
        std::size_t i = index_in(names, k, where + ".antipode");
        s[i] = poly_at(v, names, where + ".antipode[\"" + k + "\"]");
      }
      std::vector<Poly> out;
      for (std::size_t i = 0; i < n; ++i) {
        if (!s[i]) throw InputError(where + ".antipode: missing image of '" + names[i] + "'");
        out.push_back(std::move(*s[i]));
      }
      c.antipode = std::move(out);
    }
    H.coalg = std::move(c);
  }
  if (const json* nm = optional_key(j, "name")) {
    if (!nm->is_string()) throw InputError(where + ".name: expected a string");
    H.name = nm->get<std::string>();
  }
  if (const json* md = optional_key(j, "metadata")) H.params = string_map(*md, where + ".metadata");
  return H;
}

FilteredPresentation presentation_from(const json& j) {
  const std::string where = "presentation";
  if (!j.is_object()) throw InputError("presentation: expected a JSON object");
  reject_unknown(j, {"name", "variables", "filtration_weights", "commutators", "connected"}, where);
  std::vector<std::string> names = read_names(j, where);
  FilteredPresentation F(names, read_weights(require(j, "filtration_weights", where), names.size(),
                                             where + ".filtration_weights"));
  if (const json* c = optional_key(j, "commutators")) {
    for_pairs(*c, names, where + ".commutators", [&](std::size_t a, std::size_t b, Poly p) {
      F.set_commutator(a, b, std::move(p));
    });
  }
  if (const json* c = optional_key(j, "connected")) {
    if (!c->is_boolean()) throw InputError(where + ".connected: expected true or false");
    F.connected = c->get<bool>();
  }
  return F;
}

ojson names_json(const std::vector<std::string>& names) {
  ojson a = ojson::array();
  for (const auto& n : names) a.push_back(n);
  return a;
}

ojson weights_json(const Grading& g) {
  ojson a = ojson::array();
  for (int w : g.weights()) a.push_back(w);
  return a;
}

ojson bracket_json(const PoissonStructure& P) {
  ojson b = ojson::object();
  const auto& names = P.names();
  for (std::size_t i = 0; i < P.nvars(); ++i) {
    for (std::size_t j = i + 1; j < P.nvars(); ++j) {
      if (!P.entry(i, j).is_zero()) b[names[i] + "," + names[j]] = format_poly(P.entry(i, j), names);
    }
  }
  return b;
}

ojson algebra_json(const PoissonHopfAlgebra& H) {
  const auto& names = H.names();
  ojson j;
  j["name"] = H.name;
  j["variables"] = names_json(names);
  if (H.structure.grading()) j["weights"] = weights_json(*H.structure.grading());
  j["bracket"] = bracket_json(H.structure);
  if (H.coalg) {
    ojson cop = ojson::object(), cou = ojson::object();
    for (std::size_t i = 0; i < H.nvars(); ++i) {
      cop[names[i]] = format_tensor(H.coalg->delta[i], names);
      cou[names[i]] = to_string(H.coalg->counit[i]);
    }
    j["coproduct"] = cop;
    j["counit"] = cou;
    if (H.coalg->antipode) {
      ojson s = ojson::object();
      for (std::size_t i = 0; i < H.nvars(); ++i) s[names[i]] = format_poly((*H.coalg->antipode)[i], names);
      j["antipode"] = s;
    }
  }
  ojson md = ojson::object();
  for (const auto& [k, v] : H.params) md[k] = v;
  j["metadata"] = md;
  return j;
}

ojson presentation_json(const FilteredPresentation& F) {
  ojson j;
  const auto& names = F.names();
  j["variables"] = names_json(names);
  j["filtration_weights"] = weights_json(F.weights());
  ojson c = ojson::object();
  for (std::size_t a = 0; a < F.nvars(); ++a) {
    for (std::size_t b = a + 1; b < F.nvars(); ++b) {
      if (!F.commutator(a, b).is_zero()) c[names[a] + "," + names[b]] = format_poly(F.commutator(a, b), names);
    }
  }
  j["commutators"] = c;
  j["connected"] = F.connected;
  return j;
}

template <class T, class Fn>
void put_golden(ojson& out, const char* key, const std::optional<Golden<T>>& g, Fn&& value) {
  if (!g) return;
  ojson o;
  o["value"] = value(g->value);
  o["source"] = to_string(g->source);
  out[key] = o;
}

BracketDegree degree_from(const json& v, const std::string& where) {
  if (v.is_number_integer()) return {BracketDegree::Kind::Homogeneous, static_cast<long>(v.get<long long>())};
  if (v.is_string() && v.get<std::string>() == "any") return {BracketDegree::Kind::Any, 0};
  if (v.is_string() && v.get<std::string>() == "not homogeneous") return {BracketDegree::Kind::NotHomogeneous, 0};
  throw InputError(where + ": expected an integer, \"any\" or \"not homogeneous\"");
}

ojson degree_json(const BracketDegree& d) {
  if (d.kind == BracketDegree::Kind::Homogeneous) return ojson(d.d);
  return ojson(d.to_string());
}

}  // namespace

PoissonHopfAlgebra algebra_from_json(std::string_view text) { return algebra_from(parse_json(text)); }

FilteredPresentation presentation_from_json(std::string_view text) {
  json j = parse_json(text);
  if (!j.is_object()) throw InputError("presentation: expected a JSON object");
  if (const json* p = optional_key(j, "presentation")) return presentation_from(*p);
  return presentation_from(j);
}

CatalogEntry entry_from_json(std::string_view text) {
  json j = parse_json(text);
  CatalogEntry e;
  e.algebra = algebra_from(j);
  e.name = e.algebra->name;
  e.params = e.algebra->params;
  if (const json* c = optional_key(j, "notes")) e.metadata = string_map(*c, "notes");
  if (const json* p = optional_key(j, "presentation")) e.presentation = presentation_from(*p);

  const json* ex = optional_key(j, "expected");
  if (!ex) return e;
  const auto& names = e.algebra->names();
  const std::size_t n = names.size();
  auto golden = [&](const char* key) -> const json* {
    const json* g = optional_key(*ex, key);
    if (g && (!g->is_object() || !g->contains("value"))) {
      throw InputError(std::string("expected.") + key + ": expected {\"value\", \"source\"}");
    }
    return g;
  };
  auto src = [&](const json& g, const char* key) {
    return source_from(require(g, "source", std::string("expected.") + key), std::string("expected.") + key);
  };
  if (const json* g = golden("delta")) {
    const json& v = (*g)["value"];
    if (!v.is_object()) throw InputError("expected.delta.value: expected an object");
    std::vector<Poly> d(n, Poly(n));
    for (const auto& [k, x] : v.items()) d[index_in(names, k, "expected.delta")] = poly_at(x, names, "expected.delta");
    e.expected.delta = {{std::move(d), src(*g, "delta")}};
  }
  if (const json* g = golden("unimodular")) {
    if (!(*g)["value"].is_boolean()) throw InputError("expected.unimodular.value: expected true or false");
    e.expected.unimodular = {{(*g)["value"].get<bool>(), src(*g, "unimodular")}};
  }
  if (const json* g = golden("bracket_degree")) {
    e.expected.degree = {{degree_from((*g)["value"], "expected.bracket_degree"), src(*g, "bracket_degree")}};
  }
  if (const json* g = golden("t")) {
    const json& v = (*g)["value"];
    std::optional<long> t;
    if (v.is_number_integer()) {
      t = static_cast<long>(v.get<long long>());
    } else if (!v.is_null()) {
      throw InputError("expected.t.value: expected an integer or null");
    }
    e.expected.t = {{t, src(*g, "t")}};
  }
  if (const json* f = optional_key(*ex, "failing_checks")) {
    if (!f->is_array()) throw InputError("expected.failing_checks: expected an array of check names");
    for (const auto& x : *f) {
      if (!x.is_string()) throw InputError("expected.failing_checks: expected an array of check names");
      e.expected.failing_checks.push_back(x.get<std::string>());
    }
  }
  if (const json* g = golden("induced_bracket")) {
    if (!e.presentation) throw InputError("expected.induced_bracket requires a presentation");
    PoissonStructure P(e.presentation->names(), e.presentation->weights());
    for_pairs((*g)["value"], e.presentation->names(), "expected.induced_bracket",
              [&](std::size_t a, std::size_t b, Poly p) { P.set_bracket(a, b, std::move(p)); });
    P.verify();
    e.expected.induced = {{std::move(P), src(*g, "induced_bracket")}};
  }
  return e;
}

std::string to_json(const PoissonHopfAlgebra& H) { return algebra_json(H).dump(2) + "\n"; }

std::string to_json(const FilteredPresentation& F) { return presentation_json(F).dump(2) + "\n"; }

std::string to_json(const CatalogEntry& e) {
  if (!e.algebra) throw StructureError("catalog entry has no algebra to export");
  ojson j = algebra_json(*e.algebra);
  if (!e.metadata.empty()) {
    ojson notes = ojson::object();
    for (const auto& [k, v] : e.metadata) notes[k] = v;
    j["notes"] = notes;
  }
  if (e.presentation) j["presentation"] = presentation_json(*e.presentation);
  const auto& names = e.algebra->names();
  ojson ex = ojson::object();
  put_golden(ex, "delta", e.expected.delta, [&](const std::vector<Poly>& d) {
    ojson o = ojson::object();
    for (std::size_t i = 0; i < d.size(); ++i) o[names[i]] = format_poly(d[i], names);
    return o;
  });
  put_golden(ex, "unimodular", e.expected.unimodular, [](bool b) { return ojson(b); });
  put_golden(ex, "bracket_degree", e.expected.degree, [](const BracketDegree& d) { return degree_json(d); });
  put_golden(ex, "t", e.expected.t, [](const std::optional<long>& t) { return t ? ojson(*t) : ojson(nullptr); });
  put_golden(ex, "induced_bracket", e.expected.induced, [](const PoissonStructure& P) { return bracket_json(P); });
  if (!e.expected.failing_checks.empty()) ex["failing_checks"] = e.expected.failing_checks;
  j["expected"] = ex;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("error while writing '" + path + "'");
}

}  // namespace phk
