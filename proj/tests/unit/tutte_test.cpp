// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "regfactor/error.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/tutte.hpp"

namespace regfactor {
namespace {

using testing::complete;
using testing::cycle;
using testing::petersen;
using testing::star;

TEST(KOddComponents, Examples) {
  EXPECT_EQ(count_k_odd_components(complete(3), 1, {}), 1);
  EXPECT_EQ(count_k_odd_components(complete(4), 3, {}), 0);
  // C6 - {0, 3} leaves paths 1-2 and 4-5; each sends one edge to T = {3}.
  EXPECT_EQ(count_k_odd_components(cycle(6), 1, {{0}, {3}}), 2);
  EXPECT_THROW(count_k_odd_components(cycle(6), 1, {{0}, {0}}), DomainError);
  EXPECT_THROW(count_k_odd_components(cycle(6), 1, {{6}, {}}), DomainError);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(complete(4), 3, {}).delta, 0);
  EXPECT_EQ(delta(complete(3), 1, {}).delta, -1);
  EXPECT_EQ(delta(complete(5), 1, {}).delta, -1);
  const DeltaBreakdown d = delta(star(4), 2, {{0}, {1, 2, 3, 4}});
  EXPECT_EQ(d.k_s, 2);
  EXPECT_EQ(d.degree_sum, 0);
  EXPECT_EQ(d.k_t, 8);
  EXPECT_EQ(d.tau, 0);
  EXPECT_EQ(d.delta, -6);
  EXPECT_THROW(delta(complete(3), 1, {{0}, {0}}), DomainError);
}

TEST(Delta, BreakdownIdentityAndParity) {
  Rng rng(41);
  for (int t = 0; t < 3000; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 25)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    const int k = std::uniform_int_distribution<int>(0, 6)(rng);
    STPair st;
    for (int v = 0; v < n; ++v) {
      const int side = std::uniform_int_distribution<int>(0, 2)(rng);
      if (side == 1) st.s.push_back(v);
      if (side == 2) st.t.push_back(v);
    }
    const DeltaBreakdown d = delta(g, k, st);
    EXPECT_EQ(d.delta, d.k_s + d.degree_sum - d.k_t - d.tau);
    EXPECT_EQ(((d.delta - static_cast<long long>(k) * n) % 2 + 2) % 2, 0);
  }
}

TEST(Delta, EmptyPairCountsOddComponents) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    const Graph g = random_gnp(n, 0.15, rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    int odd = 0;
    for (const VertexSet& c : connected_components(g)) odd += (k * c.size()) % 2;
    EXPECT_EQ(delta(g, k, {}).delta, -odd);
    if (is_connected(g) && (k * n) % 2 == 0) EXPECT_EQ(delta(g, k, {}).delta, 0);
  }
}

TEST(BruteForce, DeficiencyExamples) {
  const DeficiencyWitness c4 = brute_force_deficiency(cycle(4), 1);
  EXPECT_EQ(c4.deficiency, 0);
  EXPECT_TRUE(c4.pair.s.empty());
  EXPECT_TRUE(c4.pair.t.empty());
  const DeficiencyWitness k3 = brute_force_deficiency(complete(3), 1);
  EXPECT_EQ(k3.deficiency, 1);
  EXPECT_TRUE(k3.pair.s.empty() && k3.pair.t.empty());
  const DeficiencyWitness s1 = brute_force_deficiency(star(4), 1);
  EXPECT_EQ(s1.deficiency, 3);
  EXPECT_EQ(s1.pair.s, VertexSet{0});
  EXPECT_EQ(delta(star(4), 1, s1.pair).delta, -3);
  EXPECT_EQ(brute_force_deficiency(star(4), 2).deficiency, 6);
}

TEST(BruteForce, HasFactorExamples) {
  EXPECT_TRUE(brute_force_has_k_factor(complete(4), 3));
  EXPECT_FALSE(brute_force_has_k_factor(complete(3), 1));
  EXPECT_TRUE(brute_force_has_k_factor(petersen(), 1));
}

TEST(BruteForce, SizeCap) {
  EXPECT_THROW(brute_force_deficiency(cycle(15), 1), SizeLimitError);
  EXPECT_THROW(brute_force_deficiency(cycle(12), 1, 10), SizeLimitError);
}

TEST(BruteForce, AgreesWithEngineOnSampledLargerGraphs) {
  Rng rng(43);
  for (int t = 0; t < 60; ++t) {
    const int n = std::uniform_int_distribution<int>(9, 12)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.15, 0.6)(rng), rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const DeficiencyWitness w = brute_force_deficiency(g, k);
    EXPECT_EQ(w.deficiency, deficiency(g, k)) << to_graph6(g) << " k=" << k;
    EXPECT_EQ(delta(g, k, w.pair).delta, -w.deficiency);
  }
}

TEST(BruteForce, GeneralDegreeSpec) {
  Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const Graph g = random_gnp(n, 0.5, rng);
    DegreeSpec spec;
    for (int v = 0; v < n; ++v) spec.f.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
    const FactorReport r = has_f_factor(g, spec);
    const DeficiencyWitness w = brute_force_deficiency(g, spec);
    EXPECT_EQ(r.deficiency, w.deficiency) << to_graph6(g);
    EXPECT_EQ(r.exists, w.deficiency == 0);
  }
}

TEST(Certificates, SizeOrderedSearchFindsSmallestOptimalPair) {
  Rng rng(45);
  for (int t = 0; t < 60; ++t) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const Graph g = random_gnp(n, 0.3, rng);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    const long long def = deficiency(g, k);
    const auto st = find_certificate(g, DegreeSpec::constant(n, k), def);
    ASSERT_TRUE(st.has_value());
    EXPECT_EQ(delta(g, k, *st).delta, -def);
    // Independent base-3 sweep for the smallest |S| + |T| attaining -def.
    std::size_t smallest = n + 1;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      STPair p;
      for (int v = 0, c = code; v < n; ++v, c /= 3) {
        if (c % 3 == 1) p.s.push_back(v);
        if (c % 3 == 2) p.t.push_back(v);
      }
      if (delta(g, k, p).delta == -def) smallest = std::min(smallest, p.s.size() + p.t.size());
    }
    EXPECT_EQ(st->s.size() + st->t.size(), smallest) << to_graph6(g) << " k=" << k;
  }
}

}  // namespace
}  // namespace regfactor
