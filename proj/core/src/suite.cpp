#include "phk/suite.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

#include "phk/error.hpp"
#include "phk/expr.hpp"

namespace phk {

bool SuiteReport::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
}

const CheckResult* SuiteReport::find(const std::string& check) const {
  for (const auto& c : checks) {
    if (c.name == check) return &c;
  }
  return nullptr;
}

namespace {

CheckResult skipped(std::string name, std::string note) {
  CheckResult r{std::move(name)};
  r.status = Status::Skipped;
  r.note = std::move(note);
  return r;
}

bool check_passed(const SuiteReport& r, const std::string& name) {
  const CheckResult* c = r.find(name);
  return c && c->passed();
}

/// Independent stream per property so adding one does not reshuffle others.
Rng stream(std::uint64_t seed, std::uint64_t k) { return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1))); }

CheckResult degree_check(const PoissonStructure& P, std::optional<BracketDegree>& out) {
  if (!P.grading()) return skipped("bracket_degree", "no grading supplied");
  CheckResult r{"bracket_degree"};
  BracketDegree d = bracket_degree(P);
  out = d;
  if (d.kind != BracketDegree::Kind::NotHomogeneous) {
    r.note = "d = " + d.to_string();
    return r;
  }
  const Grading& w = *P.grading();
  const auto& names = P.names();
  std::optional<long> first;
  for (std::size_t i = 0; i < P.nvars(); ++i) {
    for (std::size_t j = i + 1; j < P.nvars(); ++j) {
      const Poly& p = P.entry(i, j);
      if (p.is_zero()) continue;
      std::string pair = "{" + names[i] + "," + names[j] + "} = " + format_poly(p, names);
      if (!is_homogeneous(p, w)) {
        r.fail(pair + " is not homogeneous");
        return r;
      }
      long dij = *weighted_degree(p, w) - w[i] - w[j];
      if (first && *first != dij) {
        r.fail(pair + " has degree shift " + std::to_string(dij) + " but an earlier pair has " +
               std::to_string(*first));
        return r;
      }
      first = dij;
    }
  }
  r.fail("bracket is not homogeneous");
  return r;
}

std::string fmt(const Poly& p, const std::vector<std::string>& names) { return format_poly(p, names); }

Monomial random_monomial(Rng& rng, std::size_t n, unsigned max_degree) {
  std::vector<std::uint32_t> e(n, 0);
  auto deg = static_cast<unsigned>(rng.uniform(0, max_degree));
  for (unsigned k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1))];
  return Monomial(std::move(e));
}

UElement random_uelement(Rng& rng, std::size_t n) {
  UElement u(n);
  auto terms = rng.uniform(1, 2);
  for (long t = 0; t < terms; ++t) u.add_term({random_monomial(rng, n, 2), random_monomial(rng, n, 2)}, rng.nonzero_rational());
  return u;
}

void property_checks(SuiteReport& rep, const PoissonHopfAlgebra& A, const SuiteOptions& o) {
  const PoissonStructure& P = A.structure;
  const auto& names = P.names();
  const std::size_t n = P.nvars();
  const std::size_t T = o.trials;

  {
    CheckResult r{"property_leibniz"};
    Rng rng = stream(o.seed, 0);
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      Poly f = random_poly(rng, n, 3, 3), g = random_poly(rng, n, 2, 3), h = random_poly(rng, n, 2, 3);
      if (bracket(P, f, g * h) != bracket(P, f, g) * h + g * bracket(P, f, h)) {
        r.fail("f = " + fmt(f, names) + ", g = " + fmt(g, names) + ", h = " + fmt(h, names));
      }
    }
    rep.checks.push_back(r);
  }
  if (!P.verified()) {
    rep.checks.push_back(skipped("property_jacobi", "bracket not verified"));
    return;
  }
  {
    CheckResult r{"property_jacobi"};
    Rng rng = stream(o.seed, 1);
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      Poly f = random_poly(rng, n, 2, 3), g = random_poly(rng, n, 2, 3), h = random_poly(rng, n, 2, 3);
      Poly j = jacobiator(P, f, g, h);
      if (!j.is_zero()) {
        r.fail("f = " + fmt(f, names) + ", g = " + fmt(g, names) + ", h = " + fmt(h, names) + ": " + fmt(j, names));
      }
    }
    rep.checks.push_back(r);
  }
  if (rep.modular) {
    CheckResult r{"property_modular_derivation"};
    Rng rng = stream(o.seed, 2);
    const Derivation& d = rep.modular->delta;
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      Poly f = random_poly(rng, n, 3, 3), g = random_poly(rng, n, 3, 3);
      if (d.apply(bracket(P, f, g)) != bracket(P, d.apply(f), g) + bracket(P, f, d.apply(g))) {
        r.fail("f = " + fmt(f, names) + ", g = " + fmt(g, names));
      }
    }
    rep.checks.push_back(r);
  }
  if (rep.degree && rep.degree->kind != BracketDegree::Kind::NotHomogeneous) {
    CheckResult r{"property_grading"};
    Rng rng = stream(o.seed, 3);
    const Grading& w = *P.grading();
    const long d = rep.degree->effective();
    const long top = 2L * *std::max_element(w.weights().begin(), w.weights().end());
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      long i = rng.uniform(1, top), j = rng.uniform(1, top);
      Poly f = random_homogeneous(rng, w, i, 3), g = random_homogeneous(rng, w, j, 3);
      Poly b = bracket(P, f, g);
      if (!b.is_zero() && (!is_homogeneous(b, w) || *weighted_degree(b, w) != i + j + d)) {
        r.fail("deg " + std::to_string(i) + " f = " + fmt(f, names) + ", deg " + std::to_string(j) +
               " g = " + fmt(g, names) + ": {f,g} = " + fmt(b, names));
      }
    }
    rep.checks.push_back(r);
  }
  if (check_passed(rep, "poisson_coproduct")) {
    CheckResult r{"property_coproduct_poisson"};
    CheckResult e{"property_counit_bracket"};
    Rng rng = stream(o.seed, 4);
    for (std::size_t t = 0; t < T && r.witnesses.empty() && e.witnesses.empty(); ++t) {
      Poly f = random_poly(rng, n, 2, 3), g = random_poly(rng, n, 2, 3);
      Poly b = bracket(P, f, g);
      if (coproduct_extend(A, b) != tensor_bracket(P, coproduct_extend(A, f), coproduct_extend(A, g))) {
        r.fail("f = " + fmt(f, names) + ", g = " + fmt(g, names));
      }
      if (counit_extend(A, b) != 0) e.fail("f = " + fmt(f, names) + ", g = " + fmt(g, names));
    }
    rep.checks.push_back(r);
    rep.checks.push_back(e);
  }
}

void envelope_stage(SuiteReport& rep, const PoissonHopfAlgebra& A, const SuiteOptions& o) {
  const PoissonStructure& P = A.structure;
  if (!P.verified()) {
    rep.checks.push_back(skipped("envelope", "bracket not verified"));
    return;
  }
  const std::size_t n = P.nvars();
  const auto& names = P.names();
  EnvelopeAlgebra U(P);

  if (!rep.degree) {
    rep.checks.push_back(skipped("envelope_hilbert", "no grading supplied"));
  } else if (!rep.degree->nonnegative() || rep.degree->kind == BracketDegree::Kind::NotHomogeneous) {
    rep.checks.push_back(skipped("envelope_hilbert", "U(A) is not connected N-graded for d = " + rep.degree->to_string()));
  } else {
    rep.hilbert = u_hilbert(P, *o.envelope_window);
    CheckResult r{"envelope_hilbert"};
    r.note = rep.hilbert->note;
    rep.checks.push_back(r);
  }

  const std::size_t T = std::min<std::size_t>(o.trials, 16);
  {
    CheckResult r{"envelope_associativity"};
    Rng rng = stream(o.seed, 5);
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      UElement u = random_uelement(rng, n), v = random_uelement(rng, n), w = random_uelement(rng, n);
      if (U.multiply(U.multiply(u, v), w) != U.multiply(u, U.multiply(v, w))) {
        r.fail("u = " + format_uelement(u, names) + ", v = " + format_uelement(v, names) +
               ", w = " + format_uelement(w, names));
      }
    }
    rep.checks.push_back(r);
  }
  {
    CheckResult r{"envelope_relations"};
    Rng rng = stream(o.seed, 6);
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      Poly f = random_poly(rng, n, 2, 2), g = random_poly(rng, n, 2, 2);
      std::string fg = "f = " + fmt(f, names) + ", g = " + fmt(g, names);
      UElement hf = U.expand_h(f), hg = U.expand_h(g), mf = UElement::m(f), mg = UElement::m(g);
      Poly b = bracket(P, f, g);
      if (U.multiply(hf, hg) - U.multiply(hg, hf) != U.expand_h(b)) r.fail("[h_f,h_g] ≠ h_{f,g}: " + fg);
      if (U.multiply(hf, mg) - U.multiply(mg, hf) != UElement::m(b)) r.fail("[h_f,m_g] ≠ m_{f,g}: " + fg);
      if (U.expand_h(f * g) != U.multiply(mg, hf) + U.multiply(mf, hg)) r.fail("h_{fg} ≠ m_g h_f + m_f h_g: " + fg);
    }
    rep.checks.push_back(r);
  }
  if (rep.modular) {
    CheckResult r{"nakayama_candidate"};
    rep.nakayama = extend_poisson_derivation(P, rep.modular->delta.scaled(Rational(2)));
    if (!rep.nakayama->well_defined) {
      for (const auto& f : rep.nakayama->failures) r.fail(f);
    } else if (rep.nakayama->identity != rep.modular->unimodular) {
      r.fail(std::string("candidate is ") + (rep.nakayama->identity ? "" : "not ") + "the identity but δ is " +
             (rep.modular->unimodular ? "" : "non") + "zero");
    }
    r.note = rep.nakayama->identity ? "identity" : "not the identity";
    rep.checks.push_back(r);
  }
}

void homology_stage(SuiteReport& rep, const PoissonHopfAlgebra& A, const SuiteOptions& o) {
  const PoissonStructure& P = A.structure;
  if (!P.verified() || !rep.degree || rep.degree->kind == BracketDegree::Kind::NotHomogeneous) {
    rep.checks.push_back(skipped("duality", "needs a verified bracket that is homogeneous for the given grading"));
    return;
  }
  const std::size_t n = P.nvars();
  const Grading& w = *P.grading();
  {
    CheckResult r{"homology_differentials"};
    Rng rng = stream(o.seed, 7);
    const std::size_t T = std::min<std::size_t>(o.trials, 16);
    for (std::size_t t = 0; t < T && r.witnesses.empty(); ++t) {
      int k = static_cast<int>(rng.uniform(0, static_cast<long>(n)));
      long deg = rng.uniform(0, 4);
      PolyVector Q(n, k);
      DiffForm om(n, k);
      for (Subset I = 0; I < (Subset{1} << n); ++I) {
        if (std::popcount(I) != k || rng.uniform(0, 1) == 0) continue;
        Q.add(I, random_homogeneous(rng, w, deg, 2));
        om.add(I, random_homogeneous(rng, w, deg, 2));
      }
      if (!lichnerowicz_d(P, lichnerowicz_d(P, Q)).is_zero()) {
        r.fail("d² ≠ 0 on a " + std::to_string(k) + "-vector with coefficients of degree " + std::to_string(deg));
      }
      if (!brylinski_boundary(P, brylinski_boundary(P, om)).is_zero()) {
        r.fail("∂² ≠ 0 on a " + std::to_string(k) + "-form with coefficients of degree " + std::to_string(deg));
      }
    }
    rep.checks.push_back(r);
  }
  rep.duality = duality_check(P, *o.homology_window);
  CheckResult r{"duality"};
  if (!rep.modular || !rep.modular->unimodular) {
    r.status = Status::Skipped;
    r.note = "not unimodular; tables reported without a duality assertion";
  } else {
    r.status = rep.duality->status;
    if (r.failed()) {
      for (const auto& note : rep.duality->notes) r.witnesses.push_back(note);
    }
    std::ostringstream ss;
    ss << "shifts:";
    for (std::size_t i = 0; i < rep.duality->shifts.size(); ++i) {
      ss << " σ_" << i << "=" << (rep.duality->shifts[i] ? std::to_string(*rep.duality->shifts[i]) : "?");
    }
    r.note = ss.str();
  }
  rep.checks.push_back(r);
}

void theorem_stage(SuiteReport& rep, const PoissonHopfAlgebra& A) {
  auto& unmet = rep.gate.unmet;
  if (!A.structure.grading()) unmet.push_back("no grading");
  if (!check_passed(rep, "jacobi")) unmet.push_back("Poisson bracket not verified");
  if (!rep.degree || !rep.degree->nonnegative() || rep.degree->kind == BracketDegree::Kind::NotHomogeneous) {
    unmet.push_back("bracket degree " + (rep.degree ? rep.degree->to_string() : std::string("unknown")) +
                    " is not >= 0");
  }
  if (!rep.hopf || *rep.hopf != HopfStatus::HopfVerified) {
    unmet.push_back(rep.hopf ? "coalgebra is " + to_string(*rep.hopf) : std::string("no coalgebra data"));
  }
  if (!check_passed(rep, "graded_connected")) unmet.push_back("not connected graded");
  if (!check_passed(rep, "poisson_coproduct")) unmet.push_back("coproduct not a Poisson map");
  rep.gate.met = unmet.empty();

  if (!rep.gate.met) {
    std::string note = "hypotheses unmet:";
    for (const auto& u : unmet) note += " " + u + ";";
    note.pop_back();
    rep.checks.push_back(skipped("theorem_consistency", note));
    return;
  }
  CheckResult r{"theorem_consistency"};
  if (!rep.modular || !rep.modular->unimodular) {
    rep.theorem_violation = true;
    std::string w = "THEOREM-VIOLATION: hypotheses hold but δ ≠ 0";
    if (rep.modular) {
      for (std::size_t i = 0; i < A.nvars(); ++i) {
        if (!rep.modular->delta.images[i].is_zero()) {
          w += " (δ(" + A.names()[i] + ") = " + fmt(rep.modular->delta.images[i], A.names()) + ")";
          break;
        }
      }
    }
    r.fail(w);
  }
  rep.checks.push_back(r);
}

}  // namespace

SuiteReport run_suite(const PoissonHopfAlgebra& H, const SuiteOptions& o) {
  SuiteReport rep;
  rep.name = H.name;
  rep.params = H.params;
  rep.names = H.names();
  rep.trials = o.trials;
  rep.seed = o.seed;
  H.validate_shape();

  PoissonHopfAlgebra A = H;
  rep.checks.push_back(A.structure.verify());
  const bool verified = A.structure.verified();
  rep.checks.push_back(degree_check(A.structure, rep.degree));

  if (A.coalg) {
    auto axioms = check_coalgebra_axioms(A);
    rep.hopf = classify_hopf(axioms);
    rep.checks.insert(rep.checks.end(), axioms.begin(), axioms.end());
    if (A.structure.grading()) {
      rep.checks.push_back(check_graded_connected(A));
    } else {
      rep.checks.push_back(skipped("graded_connected", "no grading supplied"));
    }
    if (verified) {
      rep.checks.push_back(check_poisson_coproduct(A));
    } else {
      rep.checks.push_back(skipped("poisson_coproduct", "bracket not verified"));
    }
    rep.checks.push_back(check_antipode_antimorphism(A));
  } else {
    for (const char* c : {"coalgebra_axioms", "graded_connected", "poisson_coproduct"}) {
      rep.checks.push_back(skipped(c, "no coalgebra data supplied"));
    }
  }

  if (verified) {
    rep.modular = modular_derivation(A.structure);
    CheckResult r{"modular_derivation"};
    auto dc = check_poisson_derivation(A.structure, rep.modular->delta);
    for (const auto& [i, j] : dc.failures) {
      r.fail("δ not a Poisson derivation on (" + rep.names[i] + "," + rep.names[j] + ")");
    }
    r.note = rep.modular->unimodular ? "unimodular" : "not unimodular";
    rep.checks.push_back(r);
  } else {
    rep.checks.push_back(skipped("modular_derivation", "bracket not verified"));
  }

  theorem_stage(rep, A);
  if (o.trials > 0) property_checks(rep, A, o);
  if (o.envelope_window) envelope_stage(rep, A, o);
  if (o.homology_window) homology_stage(rep, A, o);
  return rep;
}

namespace {

std::string poly_list(const std::vector<Poly>& ps, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + format_poly(ps[i], names);
  return s + ")";
}

std::string t_text(const std::optional<long>& t) { return t ? std::to_string(*t) : std::string("none (commutative)"); }

template <class T>
CheckResult golden_check(const char* name, const Golden<T>& g) {
  CheckResult r{name};
  r.note = "source: " + to_string(g.source);
  return r;
}

void golden_stage(SuiteReport& rep, const CatalogEntry& e) {
  const auto& names = rep.names;
  const Expected& x = e.expected;
  if (x.delta) {
    CheckResult r = golden_check("golden_delta", *x.delta);
    if (!rep.modular) {
      r.fail("modular derivation not computed");
    } else if (rep.modular->delta.images != x.delta->value) {
      r.fail("δ = " + poly_list(rep.modular->delta.images, names) + ", expected " + poly_list(x.delta->value, names));
    }
    rep.checks.push_back(r);
  }
  if (x.unimodular) {
    CheckResult r = golden_check("golden_unimodular", *x.unimodular);
    if (!rep.modular) {
      r.fail("modular derivation not computed");
    } else if (rep.modular->unimodular != x.unimodular->value) {
      r.fail(std::string("unimodular = ") + (rep.modular->unimodular ? "true" : "false") + ", expected " +
             (x.unimodular->value ? "true" : "false"));
    }
    rep.checks.push_back(r);
  }
  if (x.degree) {
    CheckResult r = golden_check("golden_bracket_degree", *x.degree);
    if (!rep.degree) {
      r.fail("bracket degree not computed");
    } else if (!(*rep.degree == x.degree->value)) {
      r.fail("d = " + rep.degree->to_string() + ", expected " + x.degree->value.to_string());
    }
    rep.checks.push_back(r);
  }
  if (x.t) {
    CheckResult r = golden_check("golden_t", *x.t);
    if (!rep.t) {
      r.fail("t not computed");
    } else if (*rep.t != x.t->value) {
      r.fail("t = " + t_text(*rep.t) + ", expected " + t_text(x.t->value));
    }
    rep.checks.push_back(r);
  }
  if (x.induced) {
    CheckResult r = golden_check("golden_induced", *x.induced);
    if (!rep.induced) {
      r.fail("associated graded bracket not computed");
    } else if (!(*rep.induced == x.induced->value)) {
      const auto& P = *rep.induced;
      const auto& Q = x.induced->value;
      for (std::size_t i = 0; i < P.nvars() && i < Q.nvars(); ++i) {
        for (std::size_t j = i + 1; j < P.nvars() && j < Q.nvars(); ++j) {
          if (P.entry(i, j) != Q.entry(i, j)) {
            r.fail("{" + P.names()[i] + "," + P.names()[j] + "} = " + format_poly(P.entry(i, j), P.names()) +
                   ", expected " + format_poly(Q.entry(i, j), Q.names()));
          }
        }
      }
      if (r.witnesses.empty()) r.fail("generator names or grading differ");
    }
    rep.checks.push_back(r);
  }
}

}  // namespace

SuiteReport run_suite(const CatalogEntry& e, const SuiteOptions& o) {
  SuiteReport rep;
  if (e.algebra) {
    rep = run_suite(*e.algebra, o);
  } else {
    rep.trials = o.trials;
    rep.seed = o.seed;
  }
  rep.name = e.name;
  rep.params = e.params;
  if (e.presentation) {
    CheckResult r{"associated_graded"};
    try {
      InducedStructure S = induced_gr_poisson(*e.presentation);
      rep.t = S.t;
      rep.induced = S.structure;
      r.note = "t = " + t_text(S.t);
    } catch (const StructureError& err) {
      r.fail(err.what());
    }
    rep.checks.push_back(r);
  }
  golden_stage(rep, e);
  return rep;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson table_json(const HpTable& t) {
  ojson j;
  j["smin"] = t.smin;
  j["smax"] = t.smax;
  ojson rows = ojson::array();
  for (const auto& row : t.dims) rows.push_back(row);
  j["dims"] = rows;
  return j;
}

ojson integer_json(const Integer& z) {
  if (z.fits_slong_p()) return ojson(z.get_si());
  return ojson(z.get_str());
}

ojson bracket_json(const PoissonStructure& P) {
  ojson b = ojson::object();
  for (std::size_t i = 0; i < P.nvars(); ++i) {
    for (std::size_t j = i + 1; j < P.nvars(); ++j) {
      if (!P.entry(i, j).is_zero()) b[P.names()[i] + "," + P.names()[j]] = format_poly(P.entry(i, j), P.names());
    }
  }
  return b;
}

}  // namespace

std::string report_to_json(const SuiteReport& r) {
  ojson j;
  j["name"] = r.name;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["failed"] = r.any_failed();

  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson cj;
    cj["name"] = c.name;
    cj["status"] = std::string(to_string(c.status));
    cj["witnesses"] = c.witnesses;
    cj["note"] = c.note;
    checks.push_back(cj);
  }
  j["checks"] = checks;

  j["bracket_degree"] = r.degree ? ojson(r.degree->to_string()) : ojson(nullptr);
  j["hopf_status"] = r.hopf ? ojson(to_string(*r.hopf)) : ojson(nullptr);
  if (r.modular) {
    ojson m, images = ojson::object();
    for (std::size_t i = 0; i < r.names.size(); ++i) images[r.names[i]] = format_poly(r.modular->delta.images[i], r.names);
    m["images"] = images;
    m["unimodular"] = r.modular->unimodular;
    j["modular_derivation"] = m;
  } else {
    j["modular_derivation"] = nullptr;
  }
  ojson gate;
  gate["met"] = r.gate.met;
  gate["unmet"] = r.gate.unmet;
  j["theorem_gate"] = gate;
  j["theorem_violation"] = r.theorem_violation;

  if (r.t) {
    ojson g;
    g["t"] = *r.t ? ojson(**r.t) : ojson(nullptr);
    g["bracket"] = r.induced ? bracket_json(*r.induced) : ojson(nullptr);
    j["associated_graded"] = g;
  }
  if (r.hilbert || r.nakayama) {
    ojson env;
    if (r.hilbert) {
      ojson dims = ojson::array();
      for (const auto& d : r.hilbert->dims) dims.push_back(integer_json(d));
      env["hilbert"] = dims;
      env["gk_evidence"] = r.hilbert->gk_evidence ? ojson(*r.hilbert->gk_evidence) : ojson(nullptr);
      env["hilbert_note"] = r.hilbert->note;
    }
    if (r.nakayama) {
      ojson nk;
      nk["well_defined"] = r.nakayama->well_defined;
      nk["identity"] = r.nakayama->identity;
      nk["failures"] = r.nakayama->failures;
      env["nakayama"] = nk;
    }
    j["envelope"] = env;
  }
  if (r.duality) {
    ojson h;
    h["status"] = std::string(to_string(r.duality->status));
    ojson shifts = ojson::array();
    for (const auto& s : r.duality->shifts) shifts.push_back(s ? ojson(*s) : ojson(nullptr));
    h["shifts"] = shifts;
    h["homology"] = table_json(r.duality->homology);
    h["cohomology"] = table_json(r.duality->cohomology);
    h["notes"] = r.duality->notes;
    j["homology"] = h;
  }
  return j.dump(2) + "\n";
}

namespace {

void print_table(std::ostringstream& ss, const char* label, const HpTable& t) {
  ss << label << " (s = " << t.smin << ".." << t.smax << ")\n";
  for (std::size_t k = 0; k < t.dims.size(); ++k) {
    ss << "  k=" << k << ":";
    for (auto d : t.dims[k]) ss << ' ' << d;
    ss << '\n';
  }
}

}  // namespace

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream ss;
  ss << "== " << (r.name.empty() ? std::string("(unnamed)") : r.name);
  if (!r.params.empty()) {
    ss << " (";
    bool first = true;
    for (const auto& [k, v] : r.params) {
      ss << (first ? "" : ", ") << k << "=" << v;
      first = false;
    }
    ss << ")";
  }
  ss << "\n";
  for (const auto& c : r.checks) {
    std::string tag;
    switch (c.status) {
      case Status::Pass: tag = "PASS"; break;
      case Status::Fail: tag = "FAIL"; break;
      case Status::Skipped: tag = "SKIP"; break;
      case Status::Inconclusive: tag = "INCONCLUSIVE"; break;
    }
    ss << "  " << tag << std::string(tag.size() < 13 ? 13 - tag.size() : 1, ' ') << c.name;
    if (!c.note.empty()) ss << "  [" << c.note << "]";
    ss << "\n";
    for (const auto& w : c.witnesses) ss << "      " << w << "\n";
  }
  if (r.degree) ss << "bracket degree: " << r.degree->to_string() << "\n";
  if (r.hopf) ss << "coalgebra: " << to_string(*r.hopf) << "\n";
  if (r.modular) {
    ss << "modular derivation:";
    for (std::size_t i = 0; i < r.names.size(); ++i) {
      ss << " δ(" << r.names[i] << ") = " << format_poly(r.modular->delta.images[i], r.names) << ";";
    }
    ss << (r.modular->unimodular ? " unimodular\n" : " not unimodular\n");
  }
  ss << "theorem gate: " << (r.gate.met ? "met" : "not met") << "\n";
  if (r.theorem_violation) ss << "THEOREM-VIOLATION\n";
  if (r.t) {
    ss << "associated graded: t = " << t_text(*r.t) << "\n";
    if (r.induced) {
      ojson b = bracket_json(*r.induced);
      for (const auto& [k, v] : b.items()) ss << "  {" << k << "} = " << v.get<std::string>() << "\n";
    }
  }
  if (r.hilbert) {
    ss << "U(A) Hilbert series:";
    for (const auto& d : r.hilbert->dims) ss << ' ' << d.get_str();
    ss << "\n";
    if (r.hilbert->gk_evidence) ss << "GK dimension evidence: " << *r.hilbert->gk_evidence << "\n";
    if (!r.hilbert->note.empty()) ss << "  " << r.hilbert->note << "\n";
  }
  if (r.duality) {
    print_table(ss, "HP_k homology", r.duality->homology);
    print_table(ss, "HP^k cohomology", r.duality->cohomology);
    for (const auto& n : r.duality->notes) ss << "  " << n << "\n";
  }
  return ss.str();
}

}  // namespace phk
