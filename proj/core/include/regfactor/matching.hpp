// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

struct Matching {
  std::vector<Edge> edges;
  // mate[v] is v's partner or -1.
  std::vector<Vertex> mate;

  int size() const { return static_cast<int>(edges.size()); }
  bool is_perfect() const { return 2 * size() == static_cast<int>(mate.size()); }
};

/// Maximum-cardinality matching by Edmonds' blossom algorithm, O(n^3).
///
/// A greedy pass seeds the matching; each exposed vertex then grows an
/// alternating BFS tree, contracting odd cycles through their base until an
/// augmenting path is found or the tree is exhausted.
Matching max_matching(const Graph& g);

/// True iff `m` is a matching of `g` (vertex-disjoint edges of g).
bool is_matching(const Graph& g, const std::vector<Edge>& m);

}  // namespace regfactor
