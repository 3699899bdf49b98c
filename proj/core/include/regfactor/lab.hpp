// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "regfactor/factor.hpp"
#include "regfactor/graph.hpp"
#include "regfactor/spectral.hpp"

namespace regfactor {

enum class OrderParity { Even, Odd };

// The three arithmetic regimes under which a regular graph without a
// k-factor must contain def(G)+1 disjoint dense induced subgraphs.
enum class LemmaCondition {
  EvenDegreeOddK,  // (i)   r even, k odd, n even, r/m <= k <= r(1 - 1/m)
  OddDegreeEvenK,  // (ii)  r odd, k even, k <= r(1 - 1/m*)
  OddDegreeOddK,   // (iii) r odd, k odd, r/m* <= k
};

std::string condition_name(LemmaCondition c);

struct HypothesisProfile {
  int r = 0;
  int k = 0;
  int m = 0;
  int m_star = 0;  // odd element of {m, m+1}
  int m0 = 0;      // odd element of {m, m-1}
  std::optional<LemmaCondition> condition;
};

/// Throws DomainError unless 1 <= k < r and m >= 1. All inequalities are
/// checked in integer arithmetic.
HypothesisProfile classify_hypothesis(int r, int k, int m, OrderParity n_parity);

struct Metric {
  std::string name;
  double value = 0.0;
};

struct CampaignReport {
  std::string corpus;
  std::size_t graphs_tested = 0;
  std::size_t hypothesis_satisfying = 0;
  std::size_t conclusion_satisfying = 0;
  std::vector<std::string> counterexamples;  // graph6
  std::vector<Metric> metrics;
  std::vector<std::string> notes;

  bool passed() const { return counterexamples.empty(); }
  const Metric* metric(std::string_view name) const;
};

struct Corpus {
  std::string description;
  std::vector<Graph> graphs;
};

/// Connected r-regular graphs: exhaustive for n <= 10, `samples` random
/// graphs per order above that.
Corpus regular_corpus(int r, std::span<const int> orders, int samples = 20,
                      std::uint64_t seed = 1);

struct CampaignOptions {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  // Worker threads for per-graph work; results do not depend on this.
  int workers = 1;
};

/// (a) lambda_1 of the ExtremalEven construction equals rho1(r, m);
/// (b) `samples` random members of the class never drop below it.
CampaignReport verify_thm_2_1(int r, int m, int samples, const CampaignOptions& options = {});

/// Same for the odd-order class: ExtremalOddM3 / M1 / M2 against rho2(r, m).
/// For m = 2 the report also lists the three competing constructions, the
/// f1, f2, f3 roots, and the cubic recomputed from the construction's own
/// quotient matrix.
CampaignReport verify_thm_2_2(int r, int m, int samples, const CampaignOptions& options = {});

struct LemmaResult {
  enum class Status { Inapplicable, Verified, Failed };
  Status status = Status::Inapplicable;
  std::string reason;
  long long deficiency = 0;
  std::optional<STPair> certificate;
  std::vector<VertexSet> subgraphs;
};

std::string status_name(LemmaResult::Status s);

/// For a connected r-regular g with no k-factor that is not k-critical and
/// satisfies a lemma condition: finds a deficiency-optimal (S, T) with
/// S u T non-empty whose k-odd components include def(G)+1 pieces C with
/// e(S u T, C) <= m-1, i.e. 2e(C) >= r|C| - (m-1).
LemmaResult check_lemma_3_1(const Graph& g, int k, int m);

/// Lemma check over every (k, m) with 1 <= k < r and 1 <= m <= m_max whose
/// condition holds for the graph's order.
CampaignReport verify_lemma_3_1(const Corpus& corpus, int m_max,
                                const CampaignOptions& options = {});

/// Threshold rho1(r, m0 - 1). Hypothesis lambda_2 < threshold (n odd) or
/// lambda_3 < threshold (n even); conclusion k-critical / k-factor.
CampaignReport verify_thm_3_2(int r, int k, int m, const Corpus& corpus,
                              const CampaignOptions& options = {});

/// Threshold rho1(r, m-1) for odd m, rho2(r, m-1) for even m. Hypothesis
/// lambda_3 < threshold; conclusion k-factor.
CampaignReport verify_thm_3_3(int r, int k, int m, const Corpus& corpus,
                              const CampaignOptions& options = {});

struct ThresholdComparison {
  int r = 0;
  int m = 0;
  double rho1 = 0.0;
  double rho2 = 0.0;
};

/// rho1(r, j) and rho2(r, j) side by side for even r in [4, r_max] and even
/// j in [2, r].
std::vector<ThresholdComparison> compare_thresholds(int r_max);

struct RootOrdering {
  int r = 0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  // Largest eigenvalue of each m = 2 construction.
  double lambda_path = 0.0;      // complement of P4 + matching
  double lambda_adjacent = 0.0;  // complement of 2P3 + matching
  double lambda_star = 0.0;      // complement of K_{1,3} + matching
  std::string order;             // e.g. "f1 < f2 < f3"
};

RootOrdering root_ordering(int r);

struct InterlacingReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_gap = 0.0;  // most negative observed lhs - rhs
};

/// Random graphs with s vertex-disjoint induced subgraphs that have no
/// edges between them (unions of components of G - X for random X):
/// lambda_s(G) >= min lambda_1(H_i) - tolerance.
InterlacingReport subgraph_interlacing_trials(int trials, std::uint64_t seed,
                                              double tolerance = kDefaultTolerance);

/// Random graphs and random partitions: lambda_1(G) >= lambda_1(B) - tolerance.
InterlacingReport quotient_interlacing_trials(int trials, std::uint64_t seed,
                                              double tolerance = kDefaultTolerance);

}  // namespace regfactor
