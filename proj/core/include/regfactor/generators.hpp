// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "regfactor/graph.hpp"

namespace regfactor {

using Rng = std::mt19937_64;

/// Which threshold class a random member belongs to:
///  Even: m even, order n != r (mod 2)   (rho1)
///  Odd:  m = r (mod 2), order n = r (mod 2)   (rho2)
enum class ClassParity { Even, Odd };

/// Random simple graph with the given degree sequence. Stubs are paired one
/// at a time, only ever joining distinct non-adjacent vertices; a dead end
/// restarts the attempt. Throws GenerationError after `attempts` restarts.
Graph random_graph_with_degrees(std::span<const int> degrees, Rng& rng,
                                int attempts = 1000);

/// Connected r-regular graph on n vertices; deterministic for a fixed seed.
/// Throws DomainError if n r is odd or r >= n, GenerationError if the
/// rejection budget runs out.
Graph random_regular(int n, int r, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, Rng& rng);

/// Connected irregular graph with maximum degree r, order parity per
/// `parity`, and rn - 2e = D for some 1 <= D <= m. The order is drawn from
/// the smallest admissible value plus 0..2*extra_orders. Throws DomainError
/// for parameters outside the class's domain.
Graph random_class_member(int r, int m, ClassParity parity, std::uint64_t seed,
                          int extra_orders = 4);

/// Every graph on n vertices up to isomorphism, in canonical labeling, sorted
/// by canonical form. Built by extending each graph on n-1 vertices with a
/// new vertex in every possible way. Throws SizeLimitError for n > 9.
std::vector<Graph> enumerate_graphs(int n);

/// The connected subset of enumerate_graphs(n).
std::vector<Graph> enumerate_connected(int n);

/// Every connected r-regular graph on n vertices up to isomorphism.
///
/// Breadth-first search over isomorphism classes under 2-switches
/// (ab, cd -> ac, bd), starting from a circulant. Any two simple graphs
/// with the same degree sequence are joined by a sequence of 2-switches, so
/// the search reaches every class. Throws SizeLimitError for n > 10 and
/// DomainError if n r is odd or r >= n.
std::vector<Graph> enumerate_connected_regular(int n, int r);

}  // namespace regfactor
