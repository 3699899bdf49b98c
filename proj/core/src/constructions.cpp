// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/constructions.hpp"

#include <array>
#include <numeric>
#include <utility>

#include "regfactor/error.hpp"

namespace regfactor {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames{{
    {Family::CompleteK, "complete"},
    {Family::MatchingM, "matching"},
    {Family::CycleUnionC, "cycles"},
    {Family::StarK1s, "star"},
    {Family::PathP, "path"},
    {Family::ExtremalEven, "extremal-even"},
    {Family::ExtremalOddM3, "extremal-odd"},
    {Family::ExtremalOddM1, "extremal-odd-m1"},
    {Family::ExtremalOddM2, "extremal-odd-m2"},
    {Family::OddM2Adjacent, "odd-m2-adjacent"},
    {Family::OddM2Star, "odd-m2-star"},
}};

[[noreturn]] void reject(Family family, const std::string& why) {
  throw DomainError(std::string(family_name(family)) + ": " + why);
}

Graph matching(int pairs) {
  std::vector<Edge> edges;
  for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * pairs, edges);
}

Graph cycle_union(std::span<const int> lengths) {
  std::vector<Edge> edges;
  int base = 0;
  for (int len : lengths) {
    for (int i = 0; i < len; ++i) edges.emplace_back(base + i, base + (i + 1) % len);
    base += len;
  }
  return Graph(base, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

void check_odd_family(const ConstructionSpec& s) {
  switch (s.family) {
    case Family::ExtremalOddM1:
      if (s.r < 3 || s.r % 2 == 0) reject(s.family, "requires odd r >= 3");
      break;
    case Family::ExtremalOddM2:
    case Family::OddM2Adjacent:
    case Family::OddM2Star:
      if (s.r < 4 || s.r % 2 != 0) reject(s.family, "requires even r >= 4");
      break;
    default:
      break;
  }
}

VertexSet range(int first, int count) {
  VertexSet out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

Graph build(const ConstructionSpec& s) {
  switch (s.family) {
    case Family::CompleteK:
      if (s.size < 0) reject(s.family, "size must be >= 0");
      return complete_graph(s.size);
    case Family::MatchingM:
      if (s.size < 0) reject(s.family, "size must be >= 0");
      return matching(s.size);
    case Family::CycleUnionC:
      for (int len : s.cycles) {
        if (len < 3) reject(s.family, "every cycle needs length >= 3");
      }
      return cycle_union(s.cycles);
    case Family::StarK1s:
      if (s.size < 0) reject(s.family, "size must be >= 0");
      return star(s.size);
    case Family::PathP:
      if (s.size < 0) reject(s.family, "size must be >= 0");
      return path(s.size);
    case Family::ExtremalEven:
      if (s.r < 4) reject(s.family, "requires r >= 4");
      if (s.m % 2 != 0) reject(s.family, "requires even m");
      if (s.m < 2 || s.m > s.r + 1) reject(s.family, "requires 2 <= m <= r+1");
      return join(complete_graph(s.r + 1 - s.m), complement(matching(s.m / 2)));
    case Family::ExtremalOddM3: {
      if (s.r < 3) reject(s.family, "requires r >= 3");
      if (s.m < 3 || s.m > s.r + 1) reject(s.family, "requires 3 <= m <= r+1");
      if ((s.m - s.r) % 2 != 0) reject(s.family, "requires m = r (mod 2)");
      std::vector<int> cycles = s.cycles;
      if (cycles.empty()) cycles.push_back(s.m);
      int total = 0;
      for (int len : cycles) {
        if (len < 3) reject(s.family, "every cycle needs length >= 3");
        total += len;
      }
      if (total != s.m) reject(s.family, "cycle lengths must sum to m");
      return join(complement(matching((s.r + 2 - s.m) / 2)),
                  complement(cycle_union(cycles)));
    }
    case Family::ExtremalOddM1:
      check_odd_family(s);
      return complement(disjoint_union(star(2), matching((s.r - 1) / 2)));
    case Family::ExtremalOddM2:
      check_odd_family(s);
      return complement(disjoint_union(path(4), matching((s.r - 2) / 2)));
    case Family::OddM2Adjacent:
      check_odd_family(s);
      return complement(disjoint_union(disjoint_union(path(3), path(3)),
                                       matching((s.r - 4) / 2)));
    case Family::OddM2Star:
      check_odd_family(s);
      return complement(disjoint_union(star(3), matching((s.r - 2) / 2)));
  }
  reject(s.family, "unknown family");
}

std::vector<VertexSet> extremal_partition(const ConstructionSpec& s) {
  const Graph g = build(s);
  const int n = g.order();
  std::vector<VertexSet> parts;
  switch (s.family) {
    case Family::ExtremalEven: {
      const int full = s.r + 1 - s.m;
      parts = {range(0, full), range(full, s.m)};
      break;
    }
    case Family::ExtremalOddM3: {
      const int full = s.r + 2 - s.m;
      parts = {range(0, full), range(full, s.m)};
      break;
    }
    case Family::ExtremalOddM1:
      parts = {{0}, {1, 2}, range(3, n - 3)};
      break;
    case Family::ExtremalOddM2:
      parts = {{1, 2}, {0, 3}, range(4, n - 4)};
      break;
    case Family::OddM2Adjacent:
      parts = {{1, 4}, {0, 2, 3, 5}, range(6, n - 6)};
      break;
    case Family::OddM2Star:
      parts = {{0}, {1, 2, 3}, range(4, n - 4)};
      break;
    default:
      reject(s.family, "no canonical quotient partition");
  }
  std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
  return parts;
}

}  // namespace regfactor
