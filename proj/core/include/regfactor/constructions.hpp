// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

enum class Family {
  CompleteK,      // K_size
  MatchingM,      // size disjoint edges (2*size vertices)
  CycleUnionC,    // disjoint cycles with the given lengths
  StarK1s,        // K_{1,size}, center is vertex 0
  PathP,          // path on size vertices
  ExtremalEven,   // K_{r+1-m} joined with the complement of M_{m/2}
  ExtremalOddM3,  // complement(M_{(r+2-m)/2}) joined with complement(C_m)
  ExtremalOddM1,  // complement of K_{1,2} + M_{(r-1)/2}
  ExtremalOddM2,  // complement of P_4 + M_{(r-2)/2}
  // Non-extremal m = 2 competitors, used for the quotient ordering check.
  OddM2Adjacent,  // complement of 2P_3 + M_{(r-4)/2}
  OddM2Star,      // complement of K_{1,3} + M_{(r-2)/2}
};

struct ConstructionSpec {
  Family family = Family::CompleteK;
  int r = 0;
  int m = 0;
  int size = 0;
  // Cycle lengths for CycleUnionC; optional cycle partition of the m
  // low-degree vertices for ExtremalOddM3 (defaults to a single m-cycle).
  std::vector<int> cycles;
};

std::string_view family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Builds the graph described by `spec`. Vertices of the first join/union
/// operand come first, in construction order. Throws DomainError naming the
/// family when parameters are out of range.
Graph build(const ConstructionSpec& spec);

/// Vertex partition used in the quotient-matrix arguments for each
/// extremal family. Two parts (full-degree, deficient) for ExtremalEven and
/// ExtremalOddM3; three parts for the m = 1 and m = 2 families, ordered
/// (deficient core, its complement-neighbors, matching vertices).
std::vector<VertexSet> extremal_partition(const ConstructionSpec& spec);

}  // namespace regfactor
