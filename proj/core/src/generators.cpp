// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/generators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "regfactor/canonical.hpp"
#include "regfactor/error.hpp"

namespace regfactor {

namespace {

// Erdos-Gallai.
bool is_graphical(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  const long long total = std::accumulate(d.begin(), d.end(), 0LL);
  if (total % 2 != 0) return false;
  const int n = static_cast<int>(d.size());
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    long long rest = 0;
    for (int i = k; i < n; ++i) rest += std::min(d[i], k);
    if (prefix > static_cast<long long>(k) * (k - 1) + rest) return false;
  }
  return true;
}

}  // namespace

Graph random_graph_with_degrees(std::span<const int> degrees, Rng& rng, int attempts) {
  const int n = static_cast<int>(degrees.size());
  long long total = 0;
  for (int d : degrees) {
    if (d < 0 || (d > 0 && d >= n)) throw DomainError("degree out of range for order");
    total += d;
  }
  if (total % 2 != 0) throw DomainError("degree sum must be even");

  std::vector<int> stubs;
  std::vector<char> adj(static_cast<std::size_t>(n) * n);
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> valid;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), degrees[v], v);
    std::fill(adj.begin(), adj.end(), 0);
    edges.clear();
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      const int count = static_cast<int>(stubs.size());
      std::uniform_int_distribution<int> pick(0, count - 1);
      int i = -1;
      int j = -1;
      for (int tries = 0; tries < 32; ++tries) {
        const int a = pick(rng);
        const int b = pick(rng);
        const int u = stubs[a];
        const int v = stubs[b];
        if (a != b && u != v && !adj[static_cast<std::size_t>(u) * n + v]) {
          i = a;
          j = b;
          break;
        }
      }
      if (i < 0) {
        valid.clear();
        for (int a = 0; a < count; ++a) {
          for (int b = a + 1; b < count; ++b) {
            const int u = stubs[a];
            const int v = stubs[b];
            if (u != v && !adj[static_cast<std::size_t>(u) * n + v]) valid.emplace_back(a, b);
          }
        }
        if (valid.empty()) {
          stuck = true;
          continue;
        }
        std::uniform_int_distribution<std::size_t> choose(0, valid.size() - 1);
        std::tie(i, j) = valid[choose(rng)];
      }
      const int u = stubs[i];
      const int v = stubs[j];
      adj[static_cast<std::size_t>(u) * n + v] = adj[static_cast<std::size_t>(v) * n + u] = 1;
      edges.emplace_back(u, v);
      if (i < j) std::swap(i, j);
      stubs[i] = stubs.back();
      stubs.pop_back();
      stubs[j] = stubs.back();
      stubs.pop_back();
    }
    if (!stuck) return Graph(n, edges);
  }
  throw GenerationError("degree-sequence pairing exhausted its restart budget");
}

Graph random_regular(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 0) throw DomainError("random_regular: requires n >= 1, r >= 0");
  if ((static_cast<long long>(n) * r) % 2 != 0) {
    throw DomainError("random_regular: n*r must be even");
  }
  if (r >= n && !(n == 1 && r == 0)) throw DomainError("random_regular: requires r < n");
  Rng rng(seed);
  const std::vector<int> degrees(n, r);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Graph g = random_graph_with_degrees(degrees, rng);
    if (is_connected(g)) return g;
  }
  throw GenerationError("random_regular: no connected sample within budget");
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_class_member(int r, int m, ClassParity parity, std::uint64_t seed,
                          int extra_orders) {
  if (r < 3) throw DomainError("class member: requires r >= 3");
  if (parity == ClassParity::Even) {
    if (m % 2 != 0 || m < 2 || m > r + 1) {
      throw DomainError("class member (even): requires even m with 2 <= m <= r+1");
    }
  } else if ((m - r) % 2 != 0 || m < 1 || m > r + 1) {
    throw DomainError("class member (odd): requires m = r (mod 2) with 1 <= m <= r+1");
  }
  Rng rng(seed);
  const int base = parity == ClassParity::Even ? r + 1 : r + 2;
  std::uniform_int_distribution<int> extra(0, std::max(extra_orders, 0));
  for (int attempt = 0; attempt < 2000; ++attempt) {
    const int n = base + 2 * extra(rng);
    const int need_parity = static_cast<int>((static_cast<long long>(r) * n) % 2);
    std::vector<int> choices;
    for (int d = 1; d <= m; ++d) {
      if (d % 2 == need_parity) choices.push_back(d);
    }
    if (choices.empty()) continue;
    const int total = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];

    // Spread the missing degree over random vertices, keeping every degree
    // >= 1 and at least one vertex at degree r.
    std::vector<int> degrees(n, r);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    bool ok = true;
    for (int unit = 0; unit < total && ok; ++unit) {
      int tries = 0;
      int v = vertex(rng);
      while (degrees[v] <= 1 && ++tries < 64) v = vertex(rng);
      if (degrees[v] <= 1) ok = false;
      --degrees[v];
    }
    if (!ok || std::count(degrees.begin(), degrees.end(), r) == 0) continue;
    if (!is_graphical(degrees)) continue;
    Graph g = random_graph_with_degrees(degrees, rng, 200);
    if (is_connected(g) && g.max_degree() == r && !g.is_regular()) return g;
  }
  throw GenerationError("class member: no valid sample within budget");
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw DomainError("order must be non-negative");
  if (n > 9) throw SizeLimitError("enumerate_graphs is capped at 9 vertices");
  if (n == 0) return {Graph(0)};
  std::map<CanonicalForm, Graph> found;
  std::vector<Edge> edges;
  for (const Graph& h : enumerate_graphs(n - 1)) {
    const std::vector<Edge> base = h.edges();
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      edges = base;
      for (int v = 0; v < n - 1; ++v) {
        if (mask & (1u << v)) edges.emplace_back(v, n - 1);
      }
      const Graph g(n, edges);
      const CanonicalLabeling cl = canonical_labeling(g);
      if (!found.contains(cl.form)) found.emplace(cl.form, relabel(g, cl.label));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> all = enumerate_graphs(n);
  std::erase_if(all, [](const Graph& g) { return !is_connected(g); });
  return all;
}

std::vector<Graph> enumerate_connected_regular(int n, int r) {
  if (n < 1 || r < 0) throw DomainError("enumerate_connected_regular: requires n >= 1, r >= 0");
  if (n > 10) throw SizeLimitError("enumerate_connected_regular is capped at 10 vertices");
  if ((n * r) % 2 != 0) throw DomainError("enumerate_connected_regular: n*r must be even");
  if (r >= n && !(n == 1 && r == 0)) {
    throw DomainError("enumerate_connected_regular: requires r < n");
  }

  // Circulant start: i ~ i +- j for j <= r/2, plus the antipode when r is odd.
  std::vector<Edge> start;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= r / 2; ++j) {
      start.emplace_back(i, (i + j) % n);
    }
    if (r % 2 == 1 && i < n / 2) start.emplace_back(i, i + n / 2);
  }
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  std::map<CanonicalForm, Graph> seen;
  std::deque<const Graph*> queue;
  auto visit = [&](const Graph& g) {
    const CanonicalLabeling cl = canonical_labeling(g);
    auto [it, inserted] = seen.try_emplace(cl.form, Graph());
    if (inserted) {
      it->second = relabel(g, cl.label);
      queue.push_back(&it->second);
    }
  };
  visit(Graph(n, start));
  while (!queue.empty()) {
    const Graph& g = *queue.front();
    queue.pop_front();
    const std::vector<Edge> edges = g.edges();
    const int e = static_cast<int>(edges.size());
    for (int x = 0; x < e; ++x) {
      for (int y = x + 1; y < e; ++y) {
        const auto [a, b] = edges[x];
        const auto [c, d] = edges[y];
        if (a == c || a == d || b == c || b == d) continue;
        for (int variant = 0; variant < 2; ++variant) {
          const Edge p = variant == 0 ? Edge(a, c) : Edge(a, d);
          const Edge q = variant == 0 ? Edge(b, d) : Edge(b, c);
          if (g.adjacent(p.u, p.v) || g.adjacent(q.u, q.v)) continue;
          std::vector<Edge> next = edges;
          next[x] = p;
          next[y] = q;
          visit(Graph(n, next));
        }
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [form, g] : seen) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace regfactor
