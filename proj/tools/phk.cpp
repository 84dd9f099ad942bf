// phk: verification suite for polynomial Poisson Hopf algebras.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phk/catalog.hpp"
#include "phk/error.hpp"
#include "phk/expr.hpp"
#include "phk/spec_io.hpp"
#include "phk/suite.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw phk::InputError("--param expects key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

/// "catalog:<name>" or a path to a JSON algebra file.
phk::CatalogEntry load_source(const std::string& source, const std::vector<std::string>& params) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return phk::catalog_get(source.substr(prefix.size()), parse_params(params));
  if (!params.empty()) throw phk::InputError("--param only applies to catalog:<name> sources");
  try {
    return phk::entry_from_json(phk::read_text_file(source));
  } catch (const phk::InputError& e) {
    throw phk::InputError(source + ": " + e.what());
  }
}

const phk::PoissonHopfAlgebra& require_algebra(const phk::CatalogEntry& e) {
  if (!e.algebra) throw phk::InputError("source has no algebra");
  return *e.algebra;
}

std::uint64_t resolve_seed(const std::string& flag) {
  std::string text = flag;
  if (text.empty()) {
    if (const char* env = std::getenv("PHK_SEED")) text = env;
  }
  if (text.empty()) return phk::Rng::kDefaultSeed;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw phk::InputError("seed must be an unsigned integer, got '" + text + "'");
  }
}

phk::PoissonStructure verified_structure(const phk::PoissonHopfAlgebra& H) {
  phk::PoissonStructure P = H.structure;
  phk::CheckResult r = P.verify();
  if (!r.passed()) {
    std::string msg = "bracket fails the Jacobi identity:";
    for (const auto& w : r.witnesses) msg += "\n  " + w;
    throw phk::StructureError(msg);
  }
  return P;
}

void print_table(const phk::HpTable& t, const char* label) {
  std::cout << label << " (rows k = 0.." << t.dims.size() - 1 << ", columns s = " << t.smin << ".." << t.smax
            << ")\n";
  for (std::size_t k = 0; k < t.dims.size(); ++k) {
    std::cout << "  k=" << k << ":";
    for (auto d : t.dims[k]) std::cout << ' ' << d;
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for polynomial Poisson Hopf algebras"};
  app.require_subcommand(1);

  std::string source;
  std::vector<std::string> params;
  bool json = false;

  auto* check = app.add_subcommand("check", "Run the full verification suite");
  std::optional<int> envelope_n;
  std::optional<long> homology_n;
  std::size_t trials = 64;
  std::string seed_flag;
  check->add_option("source", source, "JSON algebra file or catalog:<name>")->required();
  check->add_option("--param", params, "Catalog parameter key=value");
  check->add_flag("--json", json, "Emit the machine-readable report");
  check->add_option("--envelope", envelope_n, "Also check U(A); Hilbert window N");
  check->add_option("--homology", homology_n, "Also tabulate (co)homology up to internal degree N");
  check->add_option("--trials", trials, "Random instances per property check")->capture_default_str();
  check->add_option("--seed", seed_flag, "Random seed (overrides PHK_SEED)");

  auto* modular = app.add_subcommand("modular", "Print the modular derivation");
  modular->add_option("source", source, "JSON algebra file or catalog:<name>")->required();
  modular->add_option("--param", params, "Catalog parameter key=value");

  auto* gr = app.add_subcommand("gr", "Associated graded Poisson bracket of a filtered presentation");
  gr->add_option("source", source, "JSON presentation file or catalog:<name>")->required();
  gr->add_option("--param", params, "Catalog parameter key=value");

  auto* envelope = app.add_subcommand("envelope", "Hilbert series of the Poisson enveloping algebra");
  int hilbert_n = 10;
  envelope->add_option("source", source, "JSON algebra file or catalog:<name>")->required();
  envelope->add_option("--param", params, "Catalog parameter key=value");
  envelope->add_option("--hilbert", hilbert_n, "Window N (degrees 0..N)")->capture_default_str();

  auto* homology = app.add_subcommand("homology", "Poisson cohomology and homology dimension tables");
  long max_degree = 8;
  bool duality = false;
  homology->add_option("source", source, "JSON algebra file or catalog:<name>")->required();
  homology->add_option("--param", params, "Catalog parameter key=value");
  homology->add_option("--max-degree", max_degree, "Internal degree cutoff N")->capture_default_str();
  homology->add_flag("--duality", duality, "Look for the duality shifts between the two tables");

  auto* catalog = app.add_subcommand("catalog", "List or export built-in examples");
  std::string entry_name, export_path;
  catalog->add_option("name", entry_name, "Entry name (omit to list)");
  catalog->add_option("--param", params, "Parameter key=value");
  catalog->add_option("--export", export_path, "Write the entry as JSON to this file ('-' for stdout)");
  catalog->add_flag("--json", json, "Emit the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) {
      phk::CatalogEntry e = load_source(source, params);
      phk::SuiteOptions o;
      o.envelope_window = envelope_n;
      o.homology_window = homology_n;
      o.trials = trials;
      o.seed = resolve_seed(seed_flag);
      if (o.envelope_window && *o.envelope_window < 0) throw phk::InputError("--envelope must be >= 0");
      phk::SuiteReport r = phk::run_suite(e, o);
      std::cout << (json ? phk::report_to_json(r) : phk::report_to_text(r));
      return r.any_failed() ? kCheckFailed : kOk;
    }

    if (modular->parsed()) {
      const phk::CatalogEntry entry = load_source(source, params);
      const auto& H = require_algebra(entry);
      phk::PoissonStructure P = verified_structure(H);
      phk::ModularDerivation m = phk::modular_derivation(P);
      for (std::size_t i = 0; i < P.nvars(); ++i) {
        std::cout << "delta(" << P.names()[i] << ") = " << phk::format_poly(m.delta.images[i], P.names()) << "\n";
      }
      std::cout << (m.unimodular ? "unimodular\n" : "not unimodular\n");
      return kOk;
    }

    if (gr->parsed()) {
      phk::FilteredPresentation F;
      if (source.rfind("catalog:", 0) == 0) {
        phk::CatalogEntry e = load_source(source, params);
        if (!e.presentation) throw phk::InputError(e.name + " has no filtered presentation");
        F = *e.presentation;
      } else {
        try {
          F = phk::presentation_from_json(phk::read_text_file(source));
        } catch (const phk::InputError& err) {
          throw phk::InputError(source + ": " + err.what());
        }
      }
      phk::InducedStructure S = phk::induced_gr_poisson(F);
      if (S.t) {
        std::cout << "t = " << *S.t << "\nbracket degree = " << -*S.t << "\n";
      } else {
        std::cout << "t = none (all commutators vanish)\n";
      }
      const auto& P = S.structure;
      for (std::size_t i = 0; i < P.nvars(); ++i) {
        for (std::size_t j = i + 1; j < P.nvars(); ++j) {
          if (P.entry(i, j).is_zero()) continue;
          std::cout << "{" << P.names()[i] << "," << P.names()[j] << "} = " << phk::format_poly(P.entry(i, j), P.names())
                    << "\n";
        }
      }
      if (!S.note.empty()) std::cout << S.note << "\n";
      return kOk;
    }

    if (envelope->parsed()) {
      if (hilbert_n < 0) throw phk::InputError("--hilbert must be >= 0");
      const phk::CatalogEntry entry = load_source(source, params);
      const auto& H = require_algebra(entry);
      phk::PoissonStructure P = verified_structure(H);
      phk::HilbertReport h = phk::u_hilbert(P, hilbert_n);
      std::cout << "dim U(A)_s, s = 0.." << hilbert_n << ":";
      for (const auto& d : h.dims) std::cout << ' ' << d.get_str();
      std::cout << "\n";
      if (h.gk_evidence) std::cout << "GK dimension evidence: " << *h.gk_evidence << "\n";
      if (!h.note.empty()) std::cout << h.note << "\n";
      return kOk;
    }

    if (homology->parsed()) {
      const phk::CatalogEntry entry = load_source(source, params);
      const auto& H = require_algebra(entry);
      phk::PoissonStructure P = verified_structure(H);
      if (duality) {
        phk::DualityReport d = phk::duality_check(P, max_degree);
        print_table(d.cohomology, "HP^k");
        print_table(d.homology, "HP_k");
        for (std::size_t i = 0; i < d.shifts.size(); ++i) {
          std::cout << "sigma_" << i << " = " << (d.shifts[i] ? std::to_string(*d.shifts[i]) : "none") << "\n";
        }
        for (const auto& n : d.notes) std::cout << n << "\n";
        std::cout << "duality: " << phk::to_string(d.status) << "\n";
        return d.status == phk::Status::Fail ? kCheckFailed : kOk;
      }
      print_table(phk::hp_dimensions(P, phk::HomologySide::Cohomology, max_degree), "HP^k");
      print_table(phk::hp_dimensions(P, phk::HomologySide::Homology, max_degree), "HP_k");
      return kOk;
    }

    if (catalog->parsed()) {
      if (entry_name.empty()) {
        if (!params.empty()) throw phk::InputError("--param needs an entry name");
        for (const auto& n : phk::catalog_names()) std::cout << n << "\n";
        return kOk;
      }
      phk::CatalogEntry e = phk::catalog_get(entry_name, parse_params(params));
      if (!export_path.empty()) {
        std::string text = phk::to_json(e);
        if (export_path == "-") {
          std::cout << text;
        } else {
          phk::write_text_file(export_path, text);
        }
        return kOk;
      }
      phk::SuiteReport r = phk::run_suite(e, phk::SuiteOptions{});
      std::cout << (json ? phk::report_to_json(r) : phk::report_to_text(r));
      return r.any_failed() ? kCheckFailed : kOk;
    }
  } catch (const phk::StructureError& e) {
    std::cerr << "phk: " << e.what() << "\n";
    return kInputError;
  } catch (const phk::GradingError& e) {
    std::cerr << "phk: " << e.what() << "\n";
    return kInputError;
  } catch (const phk::InputError& e) {
    std::cerr << "phk: " << e.what() << "\n";
    return kInputError;
  } catch (const phk::ParseError& e) {
    std::cerr << "phk: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
