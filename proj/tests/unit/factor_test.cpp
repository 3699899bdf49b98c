// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "regfactor/error.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/matching.hpp"
#include "regfactor/tutte.hpp"

namespace regfactor {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;
using testing::petersen;
using testing::star;

// Exhaustive maximum matching size by recursion over the lowest free vertex.
int brute_matching(const Graph& g) {
  std::vector<char> used(g.order(), 0);
  std::function<int(int)> go = [&](int v) -> int {
    while (v < g.order() && used[v]) ++v;
    if (v >= g.order()) return 0;
    used[v] = 1;
    int best = go(v + 1);
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      best = std::max(best, 1 + go(v + 1));
      used[w] = 0;
    }
    used[v] = 0;
    return best;
  };
  return go(0);
}

TEST(Matching, Examples) {
  EXPECT_EQ(max_matching(complete(4)).size(), 2);
  EXPECT_EQ(max_matching(complete(3)).size(), 1);
  const Matching p = max_matching(petersen());
  EXPECT_EQ(p.size(), 5);
  EXPECT_TRUE(p.is_perfect());
  EXPECT_EQ(max_matching(Graph(0)).size(), 0);
}

TEST(Matching, AgreesWithBruteForceOnAllSmallGraphs) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const Matching m = max_matching(g);
      ASSERT_TRUE(is_matching(g, m.edges));
      ASSERT_EQ(m.size(), brute_matching(g)) << to_graph6(g);
    }
  }
}

TEST(Matching, AgreesWithBruteForceOnRandomGraphsUpToTen) {
  Rng rng(31);
  for (int t = 0; t < 400; ++t) {
    const int n = std::uniform_int_distribution<int>(8, 10)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
    const Matching m = max_matching(g);
    ASSERT_TRUE(is_matching(g, m.edges));
    ASSERT_EQ(m.size(), brute_matching(g)) << to_graph6(g);
  }
}

TEST(Matching, BlossomHeavyGraphs) {
  // Odd cycles chained by single edges force nested blossoms.
  std::vector<Edge> edges;
  const int blocks = 15;
  for (int b = 0; b < blocks; ++b) {
    const int base = 5 * b;
    for (int i = 0; i < 5; ++i) edges.emplace_back(base + i, base + (i + 1) % 5);
    if (b > 0) edges.emplace_back(base - 5, base);
  }
  const Graph g(5 * blocks, edges);
  EXPECT_EQ(max_matching(g).size(), (5 * blocks) / 2);
  EXPECT_FALSE(is_matching(g, {Edge(0, 1), Edge(1, 2)}));
}

TEST(FFactor, Examples) {
  const FactorReport k4_3 = has_f_factor(complete(4), DegreeSpec::constant(4, 3));
  EXPECT_TRUE(k4_3.exists);
  EXPECT_EQ(k4_3.edges.size(), 6u);
  const FactorReport k4_1 = has_f_factor(complete(4), DegreeSpec::constant(4, 1));
  EXPECT_TRUE(k4_1.exists);
  EXPECT_EQ(k4_1.edges.size(), 2u);
  const FactorReport k3_1 = has_f_factor(complete(3), DegreeSpec::constant(3, 1));
  EXPECT_FALSE(k3_1.exists);
  EXPECT_GE(k3_1.deficiency, 1);
  const FactorReport p2 = has_f_factor(petersen(), DegreeSpec::constant(10, 2));
  ASSERT_TRUE(p2.exists);
  EXPECT_TRUE(satisfies(petersen(), p2.edges, DegreeSpec::constant(10, 2)));
  // A 2-factor of the Petersen graph is two disjoint 5-cycles.
  const auto comps = connected_components(Graph(10, p2.edges));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 5u);
  EXPECT_THROW(has_f_factor(complete(3), DegreeSpec{{1, -1, 1}}), DomainError);
  EXPECT_THROW(has_f_factor(complete(3), DegreeSpec{{1, 1}}), DomainError);
}

TEST(FFactor, DemandAboveDegreeIsInfeasibleNotAnError) {
  const FactorReport r = has_f_factor(path(3), DegreeSpec{{2, 2, 2}});
  EXPECT_FALSE(r.exists);
  EXPECT_GT(r.deficiency, 0);
}

TEST(Gadget, Examples) {
  const FactorGadget k2 = gadget_reduce(complete(2), DegreeSpec::constant(2, 1));
  EXPECT_EQ(k2.graph.order(), 2);
  EXPECT_EQ(k2.graph.size(), 1);
  EXPECT_TRUE(max_matching(k2.graph).is_perfect());

  const FactorGadget k3 = gadget_reduce(complete(3), DegreeSpec::constant(3, 2));
  EXPECT_EQ(k3.graph.order(), 6);
  EXPECT_TRUE(max_matching(k3.graph).is_perfect());

  const FactorGadget p3 = gadget_reduce(path(3), DegreeSpec::constant(3, 2));
  EXPECT_TRUE(p3.infeasible_at.has_value());
  const FactorGadget p3b = gadget_reduce(path(3), DegreeSpec{{1, 2, 0}});
  EXPECT_FALSE(max_matching(p3b.graph).is_perfect());
}

TEST(KFactor, Examples) {
  EXPECT_TRUE(k_factor(cycle(4), 1).exists);
  const FactorReport k5 = k_factor(complete(5), 1);
  EXPECT_FALSE(k5.exists);
  EXPECT_EQ(k5.deficiency, 1);
  const FactorReport p3 = k_factor(petersen(), 3);
  EXPECT_TRUE(p3.exists);
  EXPECT_EQ(p3.edges.size(), 15u);
  EXPECT_THROW(k_factor(cycle(4), -1), DomainError);
}

TEST(Deficiency, Examples) {
  EXPECT_EQ(deficiency(complete(3), 1), 1);
  EXPECT_EQ(deficiency(complete(5), 4), 0);
  // nu_2 = 2 edges, so 2*5 - 2*2 = 6; delta({center}, leaves) = 2 - 8 = -6.
  EXPECT_EQ(deficiency(star(4), 2), 6);
  EXPECT_EQ(deficiency(star(4), 1), 3);
  EXPECT_EQ(deficiency(cycle(7), 0), 0);
  EXPECT_EQ(deficiency(Graph(6), 3), 18);
}

TEST(Deficiency, CertificateAttainsDeficiency) {
  Rng rng(32);
  for (int t = 0; t < 150; ++t) {
    const int n = std::uniform_int_distribution<int>(2, 11)(rng);
    const Graph g = random_gnp(n, 0.35, rng);
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    FactorOptions o;
    o.with_certificate = true;
    const FactorReport r = k_factor(g, k, o);
    EXPECT_EQ(r.exists, r.deficiency == 0);
    if (r.exists) {
      EXPECT_TRUE(satisfies(g, r.edges, DegreeSpec::constant(n, k)));
    } else {
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_EQ(delta(g, k, *r.certificate).delta, -r.deficiency);
    }
  }
}

TEST(Deficiency, ParityAndValidityOnRandomGraphs) {
  Rng rng(33);
  for (int t = 0; t < 500; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const Graph g = random_gnp(n, std::uniform_real_distribution<double>(0.05, 0.9)(rng), rng);
    const int k = std::uniform_int_distribution<int>(0, 5)(rng);
    const FactorReport r = k_factor(g, k);
    EXPECT_EQ(((r.deficiency - static_cast<long long>(k) * n) % 2 + 2) % 2, 0);
    EXPECT_EQ(r.exists, r.deficiency == 0);
    if (r.exists) EXPECT_TRUE(satisfies(g, r.edges, DegreeSpec::constant(n, k)));
    // The partial subgraph realizes the deficiency.
    const auto h = max_degree_bounded_subgraph(g, DegreeSpec::constant(n, k));
    EXPECT_EQ(static_cast<long long>(k) * n - 2 * static_cast<long long>(h.size()), r.deficiency);
  }
}

TEST(Deficiency, SizeCap) {
  FactorOptions o;
  o.max_vertices = 10;
  EXPECT_THROW(k_factor(cycle(12), 1, o), SizeLimitError);
}

TEST(Critical, Examples) {
  EXPECT_TRUE(is_k_critical(complete(3), 1));
  EXPECT_TRUE(is_k_critical(complete(5), 1));
  EXPECT_FALSE(is_k_critical(cycle(4), 1));
  EXPECT_THROW(is_k_critical(cycle(4), 0), DomainError);
  const CriticalityReport r = criticality(complete(5), 1);
  EXPECT_FALSE(r.has_k_factor);
  EXPECT_TRUE(r.critical);
  for (const auto& d : r.near_factor_degree) {
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(*d == 0 || *d == 2);
  }
}

TEST(Critical, ImpliesDeficiencyOneOnSmallCorpus) {
  int critical = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (int k = 1; k <= 4; ++k) {
        if (!is_k_critical(g, k)) continue;
        ++critical;
        EXPECT_EQ(deficiency(g, k), 1) << to_graph6(g) << " k=" << k;
      }
    }
  }
  EXPECT_GT(critical, 0);
}

}  // namespace
}  // namespace regfactor
