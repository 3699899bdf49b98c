// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

/// Required degree f(v) for every vertex.
struct DegreeSpec {
  std::vector<int> f;

  static DegreeSpec constant(int n, int k) { return DegreeSpec{std::vector<int>(n, k)}; }
  long long total() const;
};

/// Disjoint vertex sets (S, T) of a Tutte/Lovasz certificate.
struct STPair {
  VertexSet s;
  VertexSet t;

  friend bool operator==(const STPair&, const STPair&) = default;
};

struct FactorReport {
  bool exists = false;
  // The factor when it exists, else a deficiency-optimal subgraph
  // (all degrees <= f).
  std::vector<Edge> edges;
  // min over subgraphs H with d_H <= f of sum_v (f(v) - d_H(v)).
  long long deficiency = 0;
  std::optional<STPair> certificate;
};

struct FactorOptions {
  // Attach an (S, T) pair with -delta(S, T) = deficiency when no factor exists.
  bool with_certificate = false;
  int max_vertices = 2000;
};

/// Auxiliary graph whose perfect matchings correspond to f-factors of g.
///
/// Each vertex v contributes one endpoint node per incident edge plus
/// d(v) - f(v) core nodes joined to all of v's endpoint nodes. An edge uv
/// joins its two endpoint nodes. In a perfect matching the edges of g whose
/// endpoint nodes are matched to each other form the f-factor.
struct FactorGadget {
  Graph graph;
  // For each edge of g (in g.edges() order): its two endpoint nodes.
  std::vector<Edge> host_edges;
  std::vector<std::pair<int, int>> endpoint_nodes;
  // Vertex where d(v) - f(v) < 0, if any; the gadget is then empty.
  std::optional<Vertex> infeasible_at;
};

/// Throws DomainError if some f(v) < 0 or the spec size differs from n.
FactorGadget gadget_reduce(const Graph& g, const DegreeSpec& spec);

/// Maximum number of edges in a subgraph with d_H(v) <= f(v), together with
/// one such subgraph. Uses the degree-bounded gadget (f(v) slot nodes per
/// vertex, two nodes per edge).
std::vector<Edge> max_degree_bounded_subgraph(const Graph& g, const DegreeSpec& spec);

FactorReport has_f_factor(const Graph& g, const DegreeSpec& spec,
                          const FactorOptions& options = {});

/// Throws DomainError for k < 0.
FactorReport k_factor(const Graph& g, int k, const FactorOptions& options = {});

/// k n - 2 nu_k, where nu_k is the largest edge count of a subgraph with
/// maximum degree <= k.
long long deficiency(const Graph& g, int k);

struct CriticalityReport {
  bool has_k_factor = false;
  bool critical = false;
  // Per vertex x: the degree (k-1 or k+1) realised at x by a near-factor,
  // or nullopt if neither works. Empty when a k-factor exists.
  std::vector<std::optional<int>> near_factor_degree;
};

/// Full per-vertex analysis behind is_k_critical. Throws DomainError for k < 1.
CriticalityReport criticality(const Graph& g, int k);

/// No k-factor, yet for every x some subgraph has d(x) = k +- 1 and degree k
/// elsewhere.
bool is_k_critical(const Graph& g, int k);

/// True iff `edges` is a subgraph of g with d(v) == f(v) for all v.
bool satisfies(const Graph& g, const std::vector<Edge>& edges, const DegreeSpec& spec);

}  // namespace regfactor
