// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor::testing {

// Cubic, n = 16: a hub joined to three copies of K4 with one edge
// subdivided (the subdivision vertex takes the hub edge). Deficiency 2 for
// k = 1 and k = 2.
inline Graph cubic_three_blocks() {
  std::vector<Edge> edges;
  for (int b = 0; b < 3; ++b) {
    const int a = 1 + 5 * b;
    const int x = a, y = a + 1, z = a + 2, w = a + 3, s = a + 4;
    edges.insert(edges.end(), {{x, z}, {x, w}, {y, z}, {y, w}, {z, w}, {s, x}, {s, y}, {0, s}});
  }
  return Graph(16, edges);
}

// 4-regular, n = 22: two hubs and four copies of K5 minus an edge; the two
// ends of the missing edge attach to different hubs. Deficiency 2 for
// k = 1 and k = 3.
inline Graph quartic_four_blocks() {
  std::vector<Edge> edges;
  for (int b = 0; b < 4; ++b) {
    const int a = 2 + 5 * b;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        if (i == 0 && j == 1) continue;
        edges.emplace_back(a + i, a + j);
      }
    }
    edges.emplace_back(0, a);
    edges.emplace_back(1, a + 1);
  }
  return Graph(22, edges);
}

}  // namespace regfactor::testing
