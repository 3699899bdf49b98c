// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "regfactor/canonical.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/matching.hpp"
#include "regfactor/spectral.hpp"
#include "regfactor/tutte.hpp"

namespace {

using namespace regfactor;

void BM_JacobiEigenvalues(benchmark::State& state) {
  const Graph g = random_regular(static_cast<int>(state.range(0)), 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(g));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

void BM_BlossomMatching(benchmark::State& state) {
  Rng rng(2);
  const Graph g = random_gnp(static_cast<int>(state.range(0)), 0.1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
}
BENCHMARK(BM_BlossomMatching)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_KFactorGadget(benchmark::State& state) {
  const Graph g = random_regular(static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(k_factor(g, 2));
}
BENCHMARK(BM_KFactorGadget)->Arg(20)->Arg(40)->Arg(80);

void BM_Deficiency(benchmark::State& state) {
  const Graph g = random_regular(static_cast<int>(state.range(0)), 5, 4);
  for (auto _ : state) benchmark::DoNotOptimize(deficiency(g, 3));
}
BENCHMARK(BM_Deficiency)->Arg(20)->Arg(40)->Arg(80);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_regular(static_cast<int>(state.range(0)), 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10)->Arg(16);

void BM_BruteForceOracle(benchmark::State& state) {
  const Graph g = random_regular(static_cast<int>(state.range(0)), 3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_deficiency(g, 1));
}
BENCHMARK(BM_BruteForceOracle)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
