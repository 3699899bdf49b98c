// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "regfactor/constructions.hpp"
#include "regfactor/graph.hpp"
#include "regfactor/graph6.hpp"

namespace regfactor::testing {

inline Graph petersen() { return parse_graph6("IheA@GUAo"); }

inline Graph cycle(int n) {
  ConstructionSpec spec;
  spec.family = Family::CycleUnionC;
  spec.cycles = {n};
  return build(spec);
}

inline Graph sized(Family family, int size) {
  ConstructionSpec spec;
  spec.family = family;
  spec.size = size;
  return build(spec);
}

inline Graph complete(int n) { return complete_graph(n); }
inline Graph path(int n) { return sized(Family::PathP, n); }
inline Graph star(int leaves) { return sized(Family::StarK1s, leaves); }

inline Graph from_edges(int n, std::vector<Edge> edges) { return Graph(n, edges); }

inline ConstructionSpec spec_of(Family family, int r, int m) {
  ConstructionSpec spec;
  spec.family = family;
  spec.r = r;
  spec.m = m;
  return spec;
}

}  // namespace regfactor::testing
