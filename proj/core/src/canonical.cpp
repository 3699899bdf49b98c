// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "regfactor/error.hpp"

namespace regfactor {

namespace {

using Mask = std::uint64_t;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {}

  CanonicalLabeling run() {
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    CanonicalLabeling out;
    out.form.n = n_;
    out.form.rows = std::move(best_rows_);
    out.label = std::move(best_label_);
    if (n_ == 0) out.form.rows.clear();
    return out;
  }

 private:
  static int count_colors(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  // Splits cells by (own colour, neighbour counts per colour) until stable.
  // The order of new cells depends only on these signatures.
  void refine(std::vector<int>& colors) const {
    int k = count_colors(colors);
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(k + 1, 0);
        sig[v][0] = colors[v];
        for (Mask m = adj_[v]; m; m &= m - 1) ++sig[v][1 + colors[std::countr_zero(m)]];
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colors[order[i]] = next;
      }
      const int updated = n_ == 0 ? 0 : next + 1;
      if (updated == k) return;
      k = updated;
    }
  }

  std::vector<int> individualize(const std::vector<int>& colors, int v) const {
    std::vector<int> out(n_);
    for (int u = 0; u < n_; ++u) out[u] = 2 * colors[u] + (u == v ? 0 : 1);
    std::vector<int> distinct = out;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int u = 0; u < n_; ++u) {
      out[u] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), out[u]) -
                                distinct.begin());
    }
    refine(out);
    return out;
  }

  bool twins(int u, int v) const {
    return (adj_[u] & ~(Mask{1} << v)) == (adj_[v] & ~(Mask{1} << u));
  }

  void search(const std::vector<int>& colors) {
    const int k = count_colors(colors);
    if (k == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(k, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) {
        continue;
      }
      tried.push_back(v);
      search(individualize(colors, v));
    }
  }

  void leaf(const std::vector<int>& label) {
    std::vector<Mask> rows(n_, 0);
    for (int v = 0; v < n_; ++v) {
      Mask row = 0;
      for (Mask m = adj_[v]; m; m &= m - 1) row |= Mask{1} << label[std::countr_zero(m)];
      rows[label[v]] = row;
    }
    if (best_label_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = label;
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> best_rows_;
  std::vector<int> best_label_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > 64) throw SizeLimitError("canonical form requires order <= 64");
  return Canonizer(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& label) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(label[e.u], label[e.v]);
  return Graph(g.order(), edges);
}

Graph canonical_graph(const Graph& g) {
  return relabel(g, canonical_labeling(g).label);
}

}  // namespace regfactor
