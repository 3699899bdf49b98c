// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "regfactor/error.hpp"
#include "regfactor/matching.hpp"
#include "regfactor/tutte.hpp"

namespace regfactor {

long long DegreeSpec::total() const {
  return std::accumulate(f.begin(), f.end(), 0LL);
}

namespace {

void validate(const Graph& g, const DegreeSpec& spec) {
  if (static_cast<int>(spec.f.size()) != g.order()) {
    throw DomainError("degree spec has " + std::to_string(spec.f.size()) +
                      " entries for a graph of order " + std::to_string(g.order()));
  }
  for (std::size_t v = 0; v < spec.f.size(); ++v) {
    if (spec.f[v] < 0) {
      throw DomainError("negative target degree at vertex " + std::to_string(v));
    }
  }
}

}  // namespace

FactorGadget gadget_reduce(const Graph& g, const DegreeSpec& spec) {
  validate(g, spec);
  FactorGadget out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < spec.f[v]) {
      out.infeasible_at = v;
      return out;
    }
  }
  out.host_edges = g.edges();
  const int m = static_cast<int>(out.host_edges.size());

  // Nodes 2i and 2i+1 are the u-side and v-side endpoints of edge i; core
  // nodes follow.
  std::vector<std::vector<int>> endpoints_at(g.order());
  std::vector<Edge> aux;
  out.endpoint_nodes.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Edge& e = out.host_edges[i];
    out.endpoint_nodes.emplace_back(2 * i, 2 * i + 1);
    endpoints_at[e.u].push_back(2 * i);
    endpoints_at[e.v].push_back(2 * i + 1);
    aux.emplace_back(2 * i, 2 * i + 1);
  }
  int next = 2 * m;
  for (int v = 0; v < g.order(); ++v) {
    const int cores = g.degree(v) - spec.f[v];
    for (int c = 0; c < cores; ++c, ++next) {
      for (int node : endpoints_at[v]) aux.emplace_back(node, next);
    }
  }
  out.graph = Graph(next, aux);
  return out;
}

std::vector<Edge> max_degree_bounded_subgraph(const Graph& g, const DegreeSpec& spec) {
  validate(g, spec);
  const std::vector<Edge> host = g.edges();
  const int m = static_cast<int>(host.size());

  std::vector<std::vector<int>> slots(g.order());
  int next = 2 * m;
  for (int v = 0; v < g.order(); ++v) {
    const int count = std::min(spec.f[v], g.degree(v));
    for (int c = 0; c < count; ++c) slots[v].push_back(next++);
  }
  std::vector<Edge> aux;
  for (int i = 0; i < m; ++i) {
    aux.emplace_back(2 * i, 2 * i + 1);
    for (int s : slots[host[i].u]) aux.emplace_back(2 * i, s);
    for (int s : slots[host[i].v]) aux.emplace_back(2 * i + 1, s);
  }
  const Matching mm = max_matching(Graph(next, aux));

  // An edge is used iff both of its nodes are matched into slots.
  std::vector<Edge> chosen;
  for (int i = 0; i < m; ++i) {
    const int a = mm.mate[2 * i];
    const int b = mm.mate[2 * i + 1];
    if (a >= 2 * m && b >= 2 * m) chosen.push_back(host[i]);
  }
  return chosen;
}

FactorReport has_f_factor(const Graph& g, const DegreeSpec& spec,
                          const FactorOptions& options) {
  validate(g, spec);
  if (g.order() > options.max_vertices) {
    throw SizeLimitError("factor queries are capped at " +
                         std::to_string(options.max_vertices) + " vertices");
  }
  FactorReport report;
  if (spec.total() % 2 == 0) {
    const FactorGadget gadget = gadget_reduce(g, spec);
    if (!gadget.infeasible_at) {
      const Matching mm = max_matching(gadget.graph);
      if (mm.is_perfect()) {
        report.exists = true;
        for (std::size_t i = 0; i < gadget.host_edges.size(); ++i) {
          const auto [a, b] = gadget.endpoint_nodes[i];
          if (mm.mate[a] == b) report.edges.push_back(gadget.host_edges[i]);
        }
        return report;
      }
    }
  }
  report.edges = max_degree_bounded_subgraph(g, spec);
  report.deficiency = spec.total() - 2 * static_cast<long long>(report.edges.size());
  if (options.with_certificate) {
    report.certificate = find_certificate(g, spec, report.deficiency);
  }
  return report;
}

FactorReport k_factor(const Graph& g, int k, const FactorOptions& options) {
  if (k < 0) throw DomainError("k must be non-negative");
  return has_f_factor(g, DegreeSpec::constant(g.order(), k), options);
}

long long deficiency(const Graph& g, int k) {
  if (k < 0) throw DomainError("k must be non-negative");
  const DegreeSpec spec = DegreeSpec::constant(g.order(), k);
  return spec.total() - 2 * static_cast<long long>(max_degree_bounded_subgraph(g, spec).size());
}

namespace {

std::optional<int> near_factor_degree(const Graph& g, int k, Vertex x) {
  DegreeSpec spec = DegreeSpec::constant(g.order(), k);
  for (int target : {k - 1, k + 1}) {
    if (target < 0) continue;
    spec.f[x] = target;
    if (has_f_factor(g, spec).exists) return target;
  }
  return std::nullopt;
}

}  // namespace

CriticalityReport criticality(const Graph& g, int k) {
  if (k < 1) throw DomainError("criticality requires k >= 1");
  CriticalityReport report;
  report.has_k_factor = k_factor(g, k).exists;
  if (report.has_k_factor) return report;
  report.critical = true;
  report.near_factor_degree.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    report.near_factor_degree.push_back(near_factor_degree(g, k, x));
    if (!report.near_factor_degree.back()) report.critical = false;
  }
  return report;
}

bool is_k_critical(const Graph& g, int k) {
  if (k < 1) throw DomainError("criticality requires k >= 1");
  if (k_factor(g, k).exists) return false;
  // Every near-spec has total k n +- 1.
  if ((static_cast<long long>(k) * g.order()) % 2 == 0) return false;
  for (int x = 0; x < g.order(); ++x) {
    if (!near_factor_degree(g, k, x)) return false;
  }
  return true;
}

bool satisfies(const Graph& g, const std::vector<Edge>& edges, const DegreeSpec& spec) {
  if (static_cast<int>(spec.f.size()) != g.order()) return false;
  std::vector<int> deg(g.order(), 0);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg == spec.f;
}

}  // namespace regfactor
