#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phk/catalog.hpp"
#include "phk/envelope.hpp"
#include "phk/homology.hpp"
#include "phk/random.hpp"

namespace phk {

struct SuiteOptions {
  /// Hilbert window of U(A); nullopt skips the envelope stage.
  std::optional<int> envelope_window;
  /// Internal-degree cutoff for (co)homology; nullopt skips that stage.
  std::optional<long> homology_window;
  /// Random instances per property check; 0 disables them.
  std::size_t trials = 64;
  std::uint64_t seed = Rng::kDefaultSeed;
};

/// Hypotheses of the unimodularity theorem: a verified Poisson Hopf algebra
/// that is connected graded with bracket degree d ≥ 0.
struct TheoremGate {
  bool met = false;
  std::vector<std::string> unmet;
};

struct SuiteReport {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<std::string> names;
  std::vector<CheckResult> checks;

  std::optional<BracketDegree> degree;
  std::optional<HopfStatus> hopf;
  std::optional<ModularDerivation> modular;
  TheoremGate gate;
  /// Gate met but δ ≠ 0. For correct inputs this signals a bug.
  bool theorem_violation = false;

  std::optional<std::optional<long>> t;
  std::optional<PoissonStructure> induced;
  std::optional<HilbertReport> hilbert;
  std::optional<NakayamaReport> nakayama;
  std::optional<DualityReport> duality;

  std::size_t trials = 0;
  std::uint64_t seed = 0;

  bool any_failed() const;
  const CheckResult* find(const std::string& check) const;
};

/// Runs, in order: jacobi, bracket_degree, the coalgebra axioms,
/// graded_connected, poisson_coproduct, antipode_antimorphism, the modular
/// derivation, theorem_consistency, random property checks, then the
/// optional envelope and homology stages. Stages whose prerequisites are
/// missing are recorded as skipped with a note.
SuiteReport run_suite(const PoissonHopfAlgebra& H, const SuiteOptions& options = {});

/// As above, then the associated-graded stage for a presentation and a
/// golden_* check for every expected value of the entry.
SuiteReport run_suite(const CatalogEntry& entry, const SuiteOptions& options = {});

/// Machine-readable report; byte-identical for identical inputs.
std::string report_to_json(const SuiteReport& r);
/// Plain-text report: one status line per check, witnesses indented.
std::string report_to_text(const SuiteReport& r);

}  // namespace phk
