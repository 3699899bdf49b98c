// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

/// Isomorphism-invariant adjacency code: two graphs get equal forms iff they
/// are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // label[v] = position of v in the canonical order.
  std::vector<int> label;
};

/// Individualisation-refinement search over equitable colourings; the
/// largest leaf code wins. Twin vertices in a target cell are branched on
/// once. Requires order <= 64.
CanonicalLabeling canonical_labeling(const Graph& g);

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// g relabeled into canonical order.
Graph canonical_graph(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& label);

}  // namespace regfactor
