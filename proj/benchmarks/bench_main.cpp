#include <benchmark/benchmark.h>

#include "phk/catalog.hpp"
#include "phk/envelope.hpp"
#include "phk/homology.hpp"
#include "phk/random.hpp"
#include "phk/suite.hpp"

namespace {

phk::PoissonStructure verified(const phk::CatalogEntry& e) {
  phk::PoissonStructure S = e.algebra->structure;
  S.verify();
  return S;
}

void BM_Bracket(benchmark::State& state) {
  auto S = verified(phk::unitriangular5(false));
  phk::Rng rng(1);
  auto deg = static_cast<unsigned>(state.range(0));
  phk::Poly f = phk::random_poly(rng, 5, deg, 12), g = phk::random_poly(rng, 5, deg, 12);
  for (auto _ : state) benchmark::DoNotOptimize(phk::bracket(S, f, g));
}
BENCHMARK(BM_Bracket)->Arg(2)->Arg(4)->Arg(8);

void BM_JacobiCheck(benchmark::State& state) {
  auto S = phk::unitriangular5(false).algebra->structure;
  for (auto _ : state) benchmark::DoNotOptimize(phk::validate_poisson(S));
}
BENCHMARK(BM_JacobiCheck);

void BM_EnvelopeMultiply(benchmark::State& state) {
  auto S = verified(phk::grouplike_bialgebra(1));
  auto k = static_cast<unsigned>(state.range(0));
  phk::EnvelopeAlgebra U(S);
  phk::UElement hy = phk::UElement::h(2, 1), hx = phk::UElement::h(2, 0);
  phk::UElement a = U.power(hy, k), b = U.power(hx, k);
  for (auto _ : state) {
    // A fresh algebra each time so the word cache does not hide the rewriting.
    phk::EnvelopeAlgebra fresh(S);
    benchmark::DoNotOptimize(fresh.multiply(a, b));
  }
}
BENCHMARK(BM_EnvelopeMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_HomologyDimensions(benchmark::State& state) {
  auto S = verified(phk::unitriangular5(false));
  long N = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(phk::hp_dimensions(S, phk::HomologySide::Homology, N));
}
BENCHMARK(BM_HomologyDimensions)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DualityCheck(benchmark::State& state) {
  auto S = verified(phk::unitriangular5(false));
  for (auto _ : state) benchmark::DoNotOptimize(phk::duality_check(S, 8));
}
BENCHMARK(BM_DualityCheck)->Unit(benchmark::kMillisecond);

void BM_CatalogSuite(benchmark::State& state) {
  auto entries = phk::catalog_all();
  phk::SuiteOptions o;
  o.trials = 16;
  for (auto _ : state) {
    for (const auto& e : entries) benchmark::DoNotOptimize(phk::run_suite(e, o));
  }
}
BENCHMARK(BM_CatalogSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
