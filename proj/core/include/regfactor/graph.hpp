// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regfactor {

using Vertex = int;

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Neighbor lists are kept sorted so that adjacency
/// queries are logarithmic and iteration order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws DomainError on loops, repeated edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  int size() const noexcept { return edge_count_; }

  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  std::vector<int> degrees() const;
  int max_degree() const;
  int min_degree() const;
  bool is_regular() const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Number of edges with one endpoint in `a` and the other in `b`.
  /// The sets must be disjoint.
  int edges_between(std::span<const Vertex> a, std::span<const Vertex> b) const;

  /// Row bitmasks of the adjacency matrix; requires order() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

Graph complete_graph(int n);

/// Edge uv present iff absent in g, for u != v.
Graph complement(const Graph& g);

/// Disjoint union plus every edge between the two sides. Vertices of g1 keep
/// their labels; g2's are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Subgraph induced on `vs`, relabeled 0..|vs|-1 in the order given.
/// Throws DomainError on out-of-range or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

/// Maximal connected pieces; each sorted, list ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace regfactor
