// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "regfactor/factor.hpp"
#include "regfactor/graph.hpp"

namespace regfactor {

// Terms of Tutte's functional
//   delta(S, T) = k|S| + sum_{x in T} d_{G-S}(x) - k|T| - tau,
// generalised to a degree spec f by replacing k|X| with f(X).
struct DeltaBreakdown {
  long long k_s = 0;
  long long degree_sum = 0;
  long long k_t = 0;
  long long tau = 0;
  long long delta = 0;
};

/// Components C of G - (S u T) with e(C, T) + f(C) odd.
/// Throws DomainError if S and T overlap or hold out-of-range vertices.
int count_k_odd_components(const Graph& g, int k, const STPair& st);
int count_k_odd_components(const Graph& g, const DegreeSpec& spec, const STPair& st);

DeltaBreakdown delta(const Graph& g, int k, const STPair& st);
DeltaBreakdown delta(const Graph& g, const DegreeSpec& spec, const STPair& st);

inline constexpr int kDefaultOracleCap = 14;

struct DeficiencyWitness {
  long long deficiency = 0;
  STPair pair;
};

/// max over all disjoint (S, T) of -delta(S, T), by full 3^n enumeration.
/// Returns the first maximiser in enumeration order, so (empty, empty) when
/// it is optimal. Throws SizeLimitError when n exceeds `cap` (at most 64).
DeficiencyWitness brute_force_deficiency(const Graph& g, int k,
                                         int cap = kDefaultOracleCap);
DeficiencyWitness brute_force_deficiency(const Graph& g, const DegreeSpec& spec,
                                         int cap = kDefaultOracleCap);

/// delta(S, T) >= 0 for every disjoint pair.
bool brute_force_has_k_factor(const Graph& g, int k, int cap = kDefaultOracleCap);

/// Visits disjoint pairs (S, T) with -delta(S, T) == target in order of
/// increasing |S u T|, stopping when the visitor returns true or after
/// `budget` evaluated pairs. Returns true iff the visitor stopped the search.
/// Requires n <= 64.
bool for_each_certificate(const Graph& g, const DegreeSpec& spec, long long target,
                          const std::function<bool(const STPair&)>& visitor,
                          std::uint64_t budget = 200'000'000);

/// First pair found by for_each_certificate, if any.
std::optional<STPair> find_certificate(const Graph& g, const DegreeSpec& spec,
                                       long long target,
                                       std::uint64_t budget = 200'000'000);

}  // namespace regfactor
