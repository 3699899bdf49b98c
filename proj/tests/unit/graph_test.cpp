// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "regfactor/error.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/graph.hpp"
#include "regfactor/graph6.hpp"

namespace regfactor {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, std::vector<Edge>{{1, 1}}), DomainError);
  EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph(3, std::vector<Edge>{{0, 3}}), DomainError);
  EXPECT_THROW(Graph(-1), DomainError);
}

TEST(Graph, HandshakeAndAdjacency) {
  const Graph g = testing::petersen();
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.size(), 15);
  long long sum = 0;
  for (int d : g.degrees()) sum += d;
  EXPECT_EQ(sum, 2 * g.size());
  for (const Edge& e : g.edges()) {
    EXPECT_TRUE(g.adjacent(e.u, e.v));
    EXPECT_TRUE(g.adjacent(e.v, e.u));
  }
  EXPECT_TRUE(g.is_regular());
}

TEST(Graph, ComplementExamples) {
  EXPECT_EQ(complement(complete(4)).size(), 0);
  EXPECT_EQ(complement(Graph(3)), complete(3));
  EXPECT_EQ(complement(cycle(5)).size(), 5);
  EXPECT_TRUE(complement(cycle(5)).is_regular());
  EXPECT_EQ(complement(cycle(5)).max_degree(), 2);
  EXPECT_TRUE(is_connected(complement(cycle(5))));
}

TEST(Graph, JoinExamples) {
  EXPECT_EQ(join(Graph(1), Graph(1)), complete(2));
  const Graph g = join(complete(3), Graph(2));
  EXPECT_EQ(g.size(), 9);
  EXPECT_EQ(g.degrees(), (std::vector<int>{4, 4, 4, 3, 3}));
  const Graph kab = join(Graph(2), Graph(3));
  EXPECT_EQ(kab.size(), 6);
  for (int u = 0; u < 2; ++u) {
    for (int v = 2; v < 5; ++v) EXPECT_TRUE(kab.adjacent(u, v));
  }
  EXPECT_FALSE(kab.adjacent(0, 1));
  EXPECT_FALSE(kab.adjacent(2, 3));
}

TEST(Graph, DisjointUnionExamples) {
  EXPECT_EQ(disjoint_union(Graph(1), Graph(1)), Graph(2));
  const Graph two = disjoint_union(complete(3), complete(3));
  EXPECT_EQ(two.order(), 6);
  EXPECT_EQ(two.size(), 6);
  EXPECT_TRUE(two.is_regular());
  EXPECT_FALSE(is_connected(two));
  const Graph pm = disjoint_union(path(4), complete(2));
  EXPECT_EQ(pm.order(), 6);
  EXPECT_EQ(pm.size(), 4);
}

TEST(Graph, InducedSubgraphExamples) {
  EXPECT_EQ(induced_subgraph(complete(5), VertexSet{0, 1, 2}), complete(3));
  EXPECT_EQ(induced_subgraph(cycle(5), VertexSet{0, 1, 2}), path(3));
  EXPECT_EQ(induced_subgraph(cycle(5), {}), Graph(0));
  EXPECT_THROW(induced_subgraph(cycle(5), VertexSet{0, 5}), DomainError);
  EXPECT_THROW(induced_subgraph(cycle(5), VertexSet{1, 1}), DomainError);
}

TEST(Graph, ComponentsExamples) {
  EXPECT_EQ(connected_components(complete(4)), (std::vector<VertexSet>{{0, 1, 2, 3}}));
  const auto two = connected_components(disjoint_union(complete(3), complete(3)));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 3u);
  EXPECT_EQ(two[1].size(), 3u);
  EXPECT_EQ(connected_components(Graph(3)), (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST(Graph, EdgesBetween) {
  const Graph g = complete(4);
  const VertexSet a{0, 1};
  const VertexSet b{2, 3};
  EXPECT_EQ(g.edges_between(a, b), 4);
}

class RandomGraphs : public ::testing::Test {
 protected:
  std::vector<Graph> sample(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<int> order(0, 40);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(random_gnp(order(rng), density(rng), rng));
    return out;
  }
};

TEST_F(RandomGraphs, ComplementInvolutionAndEdgeCount) {
  for (const Graph& g : sample(300, 11)) {
    const Graph c = complement(g);
    const long long n = g.order();
    EXPECT_EQ(c.size() + g.size(), n * (n - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST_F(RandomGraphs, JoinDegreeLaw) {
  const auto graphs = sample(120, 12);
  for (std::size_t i = 0; i + 1 < graphs.size(); i += 2) {
    const Graph& a = graphs[i];
    const Graph& b = graphs[i + 1];
    const Graph j = join(a, b);
    EXPECT_EQ(j.size(), a.size() + b.size() + static_cast<long long>(a.order()) * b.order());
    for (int v = 0; v < a.order(); ++v) EXPECT_EQ(j.degree(v), a.degree(v) + b.order());
    for (int v = 0; v < b.order(); ++v) {
      EXPECT_EQ(j.degree(a.order() + v), b.degree(v) + a.order());
    }
  }
}

TEST_F(RandomGraphs, ComponentsPartitionVertexSet) {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(std::uniform_int_distribution<int>(1, 30)(rng), 0.08, rng);
    const auto comps = connected_components(g);
    std::vector<int> owner(g.order(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      EXPECT_TRUE(std::is_sorted(comps[c].begin(), comps[c].end()));
      if (c > 0) EXPECT_LT(comps[c - 1].front(), comps[c].front());
      for (Vertex v : comps[c]) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(c);
      }
      EXPECT_TRUE(is_connected(induced_subgraph(g, comps[c])));
    }
    EXPECT_TRUE(std::none_of(owner.begin(), owner.end(), [](int o) { return o < 0; }));
    for (const Edge& e : g.edges()) EXPECT_EQ(owner[e.u], owner[e.v]);
  }
}

TEST(Graph6, DecodeExamples) {
  const Graph k5 = parse_graph6("D~{");
  EXPECT_EQ(k5.order(), 5);
  EXPECT_EQ(k5.size(), 10);
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 1);
  EXPECT_EQ(parse_graph6(">>graph6<<A_\n"), k2);
}

TEST(Graph6, EncodeExamples) {
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(complete(2)), "A_");
  EXPECT_EQ(to_graph6(complete(5)), "D~{");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  const std::string c4 = to_graph6(cycle(4));
  EXPECT_EQ(c4.size(), 2u);  // header byte plus one 6-bit group
  EXPECT_EQ(parse_graph6(c4), cycle(4));
}

TEST(Graph6, MalformedInputReportsOffset) {
  try {
    parse_graph6("D~");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    parse_graph6("D~{ ");  // interior space is trimmed only at the end
    SUCCEED();
  } catch (const ParseError&) {
    FAIL();
  }
  try {
    parse_graph6("D\x7f{");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D~{{"), ParseError);   // trailing bytes
  EXPECT_THROW(parse_graph6("A`"), ParseError);     // nonzero padding
  EXPECT_THROW(parse_graph6("~?"), ParseError);     // truncated long header
}

TEST(Graph6, LongHeaders) {
  const Graph big = complement(Graph(70));
  const std::string text = to_graph6(big);
  EXPECT_EQ(text.substr(0, 1), "~");
  EXPECT_EQ(parse_graph6(text), big);
  const Graph sparse(300, std::vector<Edge>{{0, 299}, {5, 17}});
  EXPECT_EQ(parse_graph6(to_graph6(sparse)), sparse);
}

TEST_F(RandomGraphs, Graph6RoundTrip) {
  int checked = 0;
  for (const Graph& g : sample(1200, 14)) {
    const std::string text = to_graph6(g);
    for (char c : text) {
      EXPECT_GE(c, 63);
      EXPECT_LE(c, 126);
    }
    EXPECT_EQ(parse_graph6(text), g);
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

}  // namespace
}  // namespace regfactor
