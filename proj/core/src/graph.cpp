// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "regfactor/error.hpp"

namespace regfactor {

Graph::Graph(int n) {
  if (n < 0) throw DomainError("graph order must be non-negative");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") out of range for order " +
                        std::to_string(n));
    }
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw DomainError("repeated edge in simple graph");
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    d[v] = static_cast<int>(adj_[v].size());
  }
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = static_cast<int>(adj_[0].size());
  for (const auto& nb : adj_) best = std::min(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edges_between(std::span<const Vertex> a,
                         std::span<const Vertex> b) const {
  std::vector<char> in_b(adj_.size(), 0);
  for (Vertex v : b) in_b[v] = 1;
  int count = 0;
  for (Vertex u : a) {
    for (Vertex v : adj_[u]) count += in_b[v];
  }
  return count;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (order() > 64) throw SizeLimitError("bitmask view requires order <= 64");
  std::vector<std::uint64_t> rows(adj_.size(), 0);
  for (int u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) rows[u] |= std::uint64_t{1} << v;
  }
  return rows;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (int v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

namespace {

std::vector<Edge> shifted_union_edges(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const int shift = g1.order();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return edges;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = shifted_union_edges(g1, g2);
  const int n1 = g1.order();
  const int n2 = g2.order();
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  }
  return Graph(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  return Graph(g1.order() + g2.order(), shifted_union_edges(g1, g2));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex v = vs[i];
    if (v < 0 || v >= g.order()) {
      throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(g.order()));
    }
    if (index[v] != -1) {
      throw DomainError("vertex " + std::to_string(v) + " listed twice");
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (Vertex w : g.neighbors(vs[i])) {
      const int j = index[w];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vs.size()), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> parts;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet part;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      part.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

}  // namespace regfactor
