// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/tutte.hpp"

#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "regfactor/error.hpp"

namespace regfactor {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// membership[v]: 0 = neither, 1 = S, 2 = T.
std::vector<char> membership(const Graph& g, const STPair& st) {
  std::vector<char> in(g.order(), 0);
  auto mark = [&](const VertexSet& set, char tag) {
    for (Vertex v : set) {
      if (v < 0 || v >= g.order()) {
        throw DomainError("vertex " + std::to_string(v) + " out of range");
      }
      if (in[v] != 0) {
        throw DomainError("vertex " + std::to_string(v) + " appears twice in (S, T)");
      }
      in[v] = tag;
    }
  };
  mark(st.s, 1);
  mark(st.t, 2);
  return in;
}

long long odd_components(const Graph& g, const DegreeSpec& spec,
                         const std::vector<char>& in) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  long long tau = 0;
  for (int s = 0; s < n; ++s) {
    if (in[s] != 0 || seen[s]) continue;
    long long parity = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      parity += spec.f[u];
      for (Vertex w : g.neighbors(u)) {
        if (in[w] == 2) {
          ++parity;  // edge into T
        } else if (in[w] == 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    tau += parity & 1;
  }
  return tau;
}

void check_spec(const Graph& g, const DegreeSpec& spec) {
  if (static_cast<int>(spec.f.size()) != g.order()) {
    throw DomainError("degree spec size does not match graph order");
  }
}

// Bitmask view shared by the enumerating routines.
struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<int> f;

  MaskGraph(const Graph& g, const DegreeSpec& spec)
      : n(g.order()), adj(g.adjacency_masks()), f(spec.f) {}

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }

  long long f_sum(Mask m) const {
    long long s = 0;
    for (; m; m &= m - 1) s += f[std::countr_zero(m)];
    return s;
  }

  // Components of G - removed, each with the parity of f(C).
  void components(Mask removed, std::vector<Mask>& comps, std::vector<int>& fpar) const {
    comps.clear();
    fpar.clear();
    Mask left = all() & ~removed;
    while (left) {
      Mask comp = left & (~left + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask grow = 0;
        for (Mask m = frontier; m; m &= m - 1) grow |= adj[std::countr_zero(m)];
        grow &= left & ~comp;
        comp |= grow;
        frontier = grow;
      }
      left &= ~comp;
      comps.push_back(comp);
      fpar.push_back(static_cast<int>(f_sum(comp) & 1));
    }
  }

  long long delta(Mask s, Mask t, const std::vector<Mask>& comps,
                  const std::vector<int>& fpar) const {
    long long value = f_sum(s) - f_sum(t);
    for (Mask m = t; m; m &= m - 1) {
      value += std::popcount(adj[std::countr_zero(m)] & ~s);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      int into_t = 0;
      for (Mask m = t; m; m &= m - 1) {
        into_t += std::popcount(adj[std::countr_zero(m)] & comps[c]);
      }
      value -= (into_t + fpar[c]) & 1;
    }
    return value;
  }
};

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

int count_k_odd_components(const Graph& g, int k, const STPair& st) {
  return count_k_odd_components(g, DegreeSpec::constant(g.order(), k), st);
}

int count_k_odd_components(const Graph& g, const DegreeSpec& spec, const STPair& st) {
  check_spec(g, spec);
  return static_cast<int>(odd_components(g, spec, membership(g, st)));
}

DeltaBreakdown delta(const Graph& g, int k, const STPair& st) {
  return delta(g, DegreeSpec::constant(g.order(), k), st);
}

DeltaBreakdown delta(const Graph& g, const DegreeSpec& spec, const STPair& st) {
  check_spec(g, spec);
  const std::vector<char> in = membership(g, st);
  DeltaBreakdown out;
  for (Vertex v : st.s) out.k_s += spec.f[v];
  for (Vertex v : st.t) {
    out.k_t += spec.f[v];
    for (Vertex w : g.neighbors(v)) out.degree_sum += in[w] != 1;
  }
  out.tau = odd_components(g, spec, in);
  out.delta = out.k_s + out.degree_sum - out.k_t - out.tau;
  return out;
}

DeficiencyWitness brute_force_deficiency(const Graph& g, int k, int cap) {
  return brute_force_deficiency(g, DegreeSpec::constant(g.order(), k), cap);
}

DeficiencyWitness brute_force_deficiency(const Graph& g, const DegreeSpec& spec, int cap) {
  check_spec(g, spec);
  if (g.order() > cap || g.order() > 64) {
    throw SizeLimitError("brute-force oracle capped at " + std::to_string(std::min(cap, 64)) +
                         " vertices, got " + std::to_string(g.order()));
  }
  const MaskGraph mg(g, spec);
  std::vector<Mask> comps;
  std::vector<int> fpar;
  long long best = std::numeric_limits<long long>::min();
  Mask best_s = 0;
  Mask best_t = 0;
  const Mask full = mg.all();
  for (Mask u = 0;; ++u) {
    mg.components(u, comps, fpar);
    // S runs over the subsets of u, starting from the empty set.
    Mask s = 0;
    for (;;) {
      const Mask t = u & ~s;
      const long long value = -mg.delta(s, t, comps, fpar);
      if (value > best) {
        best = value;
        best_s = s;
        best_t = t;
      }
      if (s == u) break;
      s = (s - u) & u;
    }
    if (u == full) break;
  }
  return {best, STPair{to_set(best_s), to_set(best_t)}};
}

bool brute_force_has_k_factor(const Graph& g, int k, int cap) {
  return brute_force_deficiency(g, k, cap).deficiency == 0;
}

bool for_each_certificate(const Graph& g, const DegreeSpec& spec, long long target,
                          const std::function<bool(const STPair&)>& visitor,
                          std::uint64_t budget) {
  check_spec(g, spec);
  if (g.order() > 64) throw SizeLimitError("certificate search requires order <= 64");
  const MaskGraph mg(g, spec);
  const int n = mg.n;
  std::vector<Mask> comps;
  std::vector<int> fpar;
  std::uint64_t evaluated = 0;
  std::vector<int> pick;
  for (int size = 0; size <= n; ++size) {
    // Lexicographic combinations of `size` vertices.
    pick.resize(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      Mask u = 0;
      for (int v : pick) u |= bit(v);
      mg.components(u, comps, fpar);
      Mask s = 0;
      for (;;) {
        const Mask t = u & ~s;
        if (-mg.delta(s, t, comps, fpar) == target &&
            visitor(STPair{to_set(s), to_set(t)})) {
          return true;
        }
        if (++evaluated >= budget) return false;
        if (s == u) break;
        s = (s - u) & u;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

std::optional<STPair> find_certificate(const Graph& g, const DegreeSpec& spec,
                                       long long target, std::uint64_t budget) {
  std::optional<STPair> found;
  for_each_certificate(
      g, spec, target,
      [&](const STPair& st) {
        found = st;
        return true;
      },
      budget);
  return found;
}

}  // namespace regfactor
