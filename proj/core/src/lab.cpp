// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include "regfactor/lab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "regfactor/constructions.hpp"
#include "regfactor/error.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/graph6.hpp"
#include "regfactor/tutte.hpp"

namespace regfactor {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Runs fn(i) for i in [0, count); each index is handled exactly once.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

bool is_odd(int x) { return x % 2 != 0; }
int odd_of(int a, int b) { return is_odd(a) ? a : b; }

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

ConstructionSpec spec_of(Family family, int r, int m) {
  ConstructionSpec spec;
  spec.family = family;
  spec.r = r;
  spec.m = m;
  return spec;
}

double lambda1(const Graph& g) { return eigenvalues(g).lambda(1); }

void add_metric(CampaignReport& report, std::string name, double value) {
  report.metrics.push_back({std::move(name), value});
}

}  // namespace

std::string condition_name(LemmaCondition c) {
  switch (c) {
    case LemmaCondition::EvenDegreeOddK:
      return "i";
    case LemmaCondition::OddDegreeEvenK:
      return "ii";
    case LemmaCondition::OddDegreeOddK:
      return "iii";
  }
  return "?";
}

std::string status_name(LemmaResult::Status s) {
  switch (s) {
    case LemmaResult::Status::Inapplicable:
      return "inapplicable";
    case LemmaResult::Status::Verified:
      return "verified";
    case LemmaResult::Status::Failed:
      return "failed";
  }
  return "?";
}

const Metric* CampaignReport::metric(std::string_view name) const {
  for (const Metric& m : metrics) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

HypothesisProfile classify_hypothesis(int r, int k, int m, OrderParity n_parity) {
  if (k < 1 || k >= r) throw DomainError("classify: requires 1 <= k < r");
  if (m < 1) throw DomainError("classify: requires m >= 1");
  HypothesisProfile p{r, k, m, odd_of(m, m + 1), odd_of(m, m - 1), std::nullopt};
  const long long R = r, K = k, M = m, MS = p.m_star;
  if (!is_odd(r) && is_odd(k)) {
    // r/m <= k <= r(1 - 1/m)
    if (n_parity == OrderParity::Even && R <= K * M && K * M <= R * (M - 1)) {
      p.condition = LemmaCondition::EvenDegreeOddK;
    }
  } else if (is_odd(r) && !is_odd(k)) {
    // k <= r(1 - 1/m*)
    if (K * MS <= R * (MS - 1)) p.condition = LemmaCondition::OddDegreeEvenK;
  } else if (is_odd(r) && is_odd(k)) {
    // r/m* <= k
    if (R <= K * MS) p.condition = LemmaCondition::OddDegreeOddK;
  }
  return p;
}

Corpus regular_corpus(int r, std::span<const int> orders, int samples, std::uint64_t seed) {
  Corpus corpus;
  std::ostringstream desc;
  desc << "connected " << r << "-regular graphs, n in {";
  bool first = true;
  for (int n : orders) {
    if ((n * r) % 2 != 0 || r >= n) continue;
    desc << (first ? "" : ",") << n;
    first = false;
    if (n <= 10) {
      for (Graph& g : enumerate_connected_regular(n, r)) corpus.graphs.push_back(std::move(g));
    } else {
      for (int i = 0; i < samples; ++i) {
        corpus.graphs.push_back(random_regular(n, r, mix_seed(seed, n * 100003ULL + i)));
      }
    }
  }
  desc << "} (exhaustive for n <= 10, " << samples << " samples per larger order)";
  corpus.description = desc.str();
  return corpus;
}

// ---------------------------------------------------------------------------
// Class minimality.

namespace {

void check_extremal(CampaignReport& report, const Graph& extremal, double threshold,
                    double tolerance) {
  const double lam = lambda1(extremal);
  ++report.graphs_tested;
  ++report.hypothesis_satisfying;
  add_metric(report, "extremal_lambda1", lam);
  add_metric(report, "extremal_gap", lam - threshold);
  if (std::abs(lam - threshold) <= tolerance) {
    ++report.conclusion_satisfying;
  } else {
    report.counterexamples.push_back(to_graph6(extremal));
    report.notes.push_back("extremal construction has lambda_1 = " + format_double(lam) +
                           ", threshold " + format_double(threshold));
  }
}

void sample_class(CampaignReport& report, int r, int m, ClassParity parity, int samples,
                  double threshold, const CampaignOptions& options) {
  std::vector<double> lams(samples);
  std::vector<std::string> codes(samples);
  parallel_for(samples, options.workers, [&](std::size_t i) {
    const Graph g = random_class_member(r, m, parity, mix_seed(options.seed, i));
    lams[i] = lambda1(g);
    codes[i] = to_graph6(g);
  });
  double min_lam = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    ++report.graphs_tested;
    ++report.hypothesis_satisfying;
    min_lam = std::min(min_lam, lams[i]);
    if (lams[i] >= threshold - options.tolerance) {
      ++report.conclusion_satisfying;
    } else {
      report.counterexamples.push_back(codes[i]);
    }
  }
  if (samples > 0) {
    add_metric(report, "min_sample_lambda1", min_lam);
    add_metric(report, "min_sample_margin", min_lam - threshold);
  }
}

}  // namespace

CampaignReport verify_thm_2_1(int r, int m, int samples, const CampaignOptions& options) {
  if (r < 4) throw DomainError("thm2.1: requires r >= 4");
  const SpectralThreshold thr = rho1(r, m);
  CampaignReport report;
  report.corpus = "extremal-even(r=" + std::to_string(r) + ", m=" + std::to_string(m) +
                  ") + " + std::to_string(samples) + " random members of the even class";
  add_metric(report, "threshold", thr.value);
  const Graph extremal = build(spec_of(Family::ExtremalEven, r, m));
  if (extremal.is_regular()) {
    report.notes.push_back("m = r+1: the construction is (r-1)-regular, outside the class");
  }
  check_extremal(report, extremal, thr.value, options.tolerance);
  sample_class(report, r, m, ClassParity::Even, samples, thr.value, options);
  return report;
}

CampaignReport verify_thm_2_2(int r, int m, int samples, const CampaignOptions& options) {
  const SpectralThreshold thr = rho2(r, m);
  CampaignReport report;
  report.corpus = "extremal-odd(r=" + std::to_string(r) + ", m=" + std::to_string(m) +
                  ") + " + std::to_string(samples) + " random members of the odd class";
  add_metric(report, "threshold", thr.value);
  ConstructionSpec spec = spec_of(Family::ExtremalOddM3, r, m);
  if (m == 1) spec.family = Family::ExtremalOddM1;
  if (m == 2) spec.family = Family::ExtremalOddM2;
  const Graph extremal = build(spec);
  check_extremal(report, extremal, thr.value, options.tolerance);

  if (m == 1 || m == 2) {
    const QuotientMatrix q = quotient_matrix(extremal, extremal_partition(spec));
    add_metric(report, "extremal_partition_equitable", is_equitable(extremal, q.parts) ? 1 : 0);
    add_metric(report, "quotient_cubic_root", largest_root(quotient_characteristic(q)));
  }
  if (m == 2) {
    const RootOrdering ro = root_ordering(r);
    add_metric(report, "root_f1", ro.f1);
    add_metric(report, "root_f2", ro.f2);
    add_metric(report, "root_f3", ro.f3);
    add_metric(report, "lambda1_path_case", ro.lambda_path);
    add_metric(report, "lambda1_adjacent_case", ro.lambda_adjacent);
    add_metric(report, "lambda1_star_case", ro.lambda_star);
    report.notes.push_back("root ordering: " + ro.order);
  }
  sample_class(report, r, m, ClassParity::Odd, samples, thr.value, options);
  return report;
}

// ---------------------------------------------------------------------------
// Dense-subgraph witnesses for deficient regular graphs.

namespace {

struct Pieces {
  VertexSet members;
  int boundary = 0;  // e(S u T, C)
  bool k_odd = false;
};

std::vector<Pieces> pieces_outside(const Graph& g, int k, const STPair& st) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : st.s) in[v] = 1;
  for (Vertex v : st.t) in[v] = 2;
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v) {
    if (!in[v]) rest.push_back(v);
  }
  const Graph h = induced_subgraph(g, rest);
  std::vector<Pieces> out;
  for (const VertexSet& comp : connected_components(h)) {
    Pieces p;
    int into_t = 0;
    for (Vertex local : comp) {
      const Vertex v = rest[local];
      p.members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (in[w]) ++p.boundary;
        if (in[w] == 2) ++into_t;
      }
    }
    p.k_odd = ((into_t + static_cast<long long>(k) * comp.size()) % 2) != 0;
    out.push_back(std::move(p));
  }
  return out;
}

// Assumes the preconditions hold and def >= 1.
LemmaResult lemma_witness(const Graph& g, int k, int m, long long def) {
  LemmaResult result;
  result.deficiency = def;
  const int r = g.max_degree();
  const DegreeSpec spec = DegreeSpec::constant(g.order(), k);
  const bool found = for_each_certificate(g, spec, def, [&](const STPair& st) {
    if (st.s.empty() && st.t.empty()) return false;
    std::vector<VertexSet> dense;
    for (const Pieces& p : pieces_outside(g, k, st)) {
      if (p.k_odd && p.boundary <= m - 1) dense.push_back(p.members);
    }
    if (static_cast<long long>(dense.size()) < def + 1) return false;
    dense.resize(def + 1);
    result.certificate = st;
    result.subgraphs = std::move(dense);
    return true;
  });
  if (!found) {
    result.status = LemmaResult::Status::Failed;
    result.reason = "no deficiency-optimal (S,T) yields def+1 dense k-odd components";
    return result;
  }
  for (const VertexSet& part : result.subgraphs) {
    const Graph h = induced_subgraph(g, part);
    if (2LL * h.size() < static_cast<long long>(r) * h.order() - (m - 1)) {
      result.status = LemmaResult::Status::Failed;
      result.reason = "exhibited subgraph violates 2e(H) >= r|H| - (m-1)";
      return result;
    }
  }
  result.status = LemmaResult::Status::Verified;
  return result;
}

LemmaResult inapplicable(std::string why) {
  LemmaResult r;
  r.status = LemmaResult::Status::Inapplicable;
  r.reason = std::move(why);
  return r;
}

}  // namespace

LemmaResult check_lemma_3_1(const Graph& g, int k, int m) {
  if (!is_connected(g) || g.order() == 0) return inapplicable("graph is not connected");
  if (!g.is_regular()) return inapplicable("graph is not regular");
  const int r = g.max_degree();
  if (k < 1 || k >= r) return inapplicable("requires 1 <= k < r");
  if (m < 1) return inapplicable("requires m >= 1");
  const OrderParity parity = g.order() % 2 == 0 ? OrderParity::Even : OrderParity::Odd;
  if (!classify_hypothesis(r, k, m, parity).condition) {
    return inapplicable("no lemma condition holds for (r, k, m)");
  }
  const long long def = deficiency(g, k);
  if (def == 0) return inapplicable("graph has a k-factor");
  if (is_k_critical(g, k)) return inapplicable("graph is k-critical");
  return lemma_witness(g, k, m, def);
}

CampaignReport verify_lemma_3_1(const Corpus& corpus, int m_max, const CampaignOptions& options) {
  struct Row {
    std::size_t tested = 0;
    std::size_t applicable = 0;
    std::size_t verified = 0;
    std::vector<std::string> failures;
  };
  std::vector<Row> rows(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), options.workers, [&](std::size_t i) {
    const Graph& g = corpus.graphs[i];
    Row& row = rows[i];
    if (!is_connected(g) || !g.is_regular()) return;
    const int r = g.max_degree();
    const OrderParity parity = g.order() % 2 == 0 ? OrderParity::Even : OrderParity::Odd;
    for (int k = 1; k < r; ++k) {
      std::optional<long long> def;
      std::optional<bool> critical;
      for (int m = 1; m <= m_max; ++m) {
        if (!classify_hypothesis(r, k, m, parity).condition) continue;
        ++row.tested;
        if (!def) def = deficiency(g, k);
        if (*def == 0) continue;
        if (!critical) critical = is_k_critical(g, k);
        if (*critical) continue;
        ++row.applicable;
        const LemmaResult res = lemma_witness(g, k, m, *def);
        if (res.status == LemmaResult::Status::Verified) {
          ++row.verified;
        } else {
          row.failures.push_back(to_graph6(g) + " k=" + std::to_string(k) +
                                 " m=" + std::to_string(m));
        }
      }
    }
  });
  CampaignReport report;
  report.corpus = corpus.description;
  for (Row& row : rows) {
    report.graphs_tested += row.tested;
    report.hypothesis_satisfying += row.applicable;
    report.conclusion_satisfying += row.verified;
    for (auto& f : row.failures) report.counterexamples.push_back(std::move(f));
  }
  report.notes.push_back("counts are (graph, k, m) triples with a lemma condition");
  return report;
}

// ---------------------------------------------------------------------------
// Eigenvalue sufficient conditions.

namespace {

struct GraphOutcome {
  bool tested = false;
  bool hypothesis = false;
  bool conclusion = false;
  double lambda = 0.0;
  std::string code;
};

// lambda_index(G) < threshold  =>  predicate(G).
template <class IndexFn, class Predicate>
void run_sweep(CampaignReport& report, const Corpus& corpus, int r, double threshold,
               const CampaignOptions& options, IndexFn index_for, Predicate conclusion) {
  std::vector<GraphOutcome> out(corpus.graphs.size());
  parallel_for(corpus.graphs.size(), options.workers, [&](std::size_t i) {
    const Graph& g = corpus.graphs[i];
    GraphOutcome& o = out[i];
    if (!is_connected(g) || !g.is_regular() || g.max_degree() != r) return;
    const int idx = index_for(g);
    if (idx > g.order()) return;
    o.tested = true;
    o.lambda = eigenvalues(g).lambda(idx);
    o.hypothesis = strictly_below(o.lambda, threshold, options.tolerance);
    o.conclusion = conclusion(g);
    o.code = to_graph6(g);
  });
  double closest_below = -std::numeric_limits<double>::infinity();
  double closest_above = std::numeric_limits<double>::infinity();
  double min_without = std::numeric_limits<double>::infinity();
  std::size_t skipped = 0;
  for (const GraphOutcome& o : out) {
    if (!o.tested) {
      ++skipped;
      continue;
    }
    ++report.graphs_tested;
    if (!o.conclusion) min_without = std::min(min_without, o.lambda);
    if (!o.hypothesis) {
      closest_above = std::min(closest_above, o.lambda);
      continue;
    }
    closest_below = std::max(closest_below, o.lambda);
    ++report.hypothesis_satisfying;
    if (o.conclusion) {
      ++report.conclusion_satisfying;
    } else {
      report.counterexamples.push_back(o.code);
    }
  }
  if (std::isfinite(closest_below)) add_metric(report, "max_lambda_below_threshold", closest_below);
  if (std::isfinite(closest_above)) add_metric(report, "min_lambda_at_or_above_threshold", closest_above);
  if (std::isfinite(min_without)) add_metric(report, "min_lambda_without_conclusion", min_without);
  if (skipped > 0) {
    report.notes.push_back(std::to_string(skipped) +
                           " corpus graphs skipped (not connected " + std::to_string(r) +
                           "-regular)");
  }
}

}  // namespace

CampaignReport verify_thm_3_2(int r, int k, int m, const Corpus& corpus,
                              const CampaignOptions& options) {
  if (is_odd(r) || !is_odd(k)) throw DomainError("thm3.2: requires r even and k odd");
  if (m < 3) throw DomainError("thm3.2: requires m >= 3");
  if (k < 1 || k >= r) throw DomainError("thm3.2: requires 1 <= k < r");
  if (!(static_cast<long long>(r) <= static_cast<long long>(k) * m &&
        static_cast<long long>(k) * m <= static_cast<long long>(r) * (m - 1))) {
    throw DomainError("thm3.2: requires r/m <= k <= r(1 - 1/m)");
  }
  const int m0 = odd_of(m, m - 1);
  const double threshold = rho1(r, m0 - 1).value;
  CampaignReport report;
  report.corpus = corpus.description;
  add_metric(report, "threshold", threshold);
  const double partner = rho2(r, m0 - 1).value;
  add_metric(report, "rho2_same_m", partner);
  report.notes.push_back(std::string("rho1(r, m0-1) ") + (threshold <= partner ? "<=" : ">") +
                         " rho2(r, m0-1)");
  run_sweep(
      report, corpus, r, threshold, options,
      [](const Graph& g) { return g.order() % 2 == 0 ? 3 : 2; },
      [k](const Graph& g) {
        return g.order() % 2 == 0 ? k_factor(g, k).exists : is_k_critical(g, k);
      });
  return report;
}

CampaignReport verify_thm_3_3(int r, int k, int m, const Corpus& corpus,
                              const CampaignOptions& options) {
  if (!is_odd(r)) throw DomainError("thm3.3: requires r odd");
  if (k < 1 || k >= r) throw DomainError("thm3.3: requires 1 <= k < r");
  if (m < 2) throw DomainError("thm3.3: requires m >= 2");
  const int m_star = odd_of(m, m + 1);
  const long long R = r, K = k, MS = m_star;
  const bool cond_even_k = !is_odd(k) && K * MS <= R * (MS - 1);
  const bool cond_odd_k = is_odd(k) && R <= K * MS;
  if (!cond_even_k && !cond_odd_k) {
    throw DomainError("thm3.3: requires k even with k <= r(1 - 1/m*) or k odd with r/m* <= k");
  }
  CampaignReport report;
  report.corpus = corpus.description;
  double threshold = 0.0;
  if (is_odd(m)) {
    threshold = rho1(r, m - 1).value;
    const double partner = rho2(r, m - 2).value;
    add_metric(report, "rho2_m_minus_2", partner);
    report.notes.push_back(std::string("min{rho1(r,m-1), rho2(r,m-2)} is ") +
                           (threshold <= partner ? "rho1(r,m-1)" : "rho2(r,m-2)"));
  } else {
    threshold = rho2(r, m - 1).value;
    if (m >= 4) {
      const double partner = rho1(r, m - 2).value;
      add_metric(report, "rho1_m_minus_2", partner);
      report.notes.push_back(std::string("min{rho1(r,m-2), rho2(r,m-1)} is ") +
                             (partner <= threshold ? "rho1(r,m-2)" : "rho2(r,m-1)"));
    }
  }
  add_metric(report, "threshold", threshold);
  run_sweep(
      report, corpus, r, threshold, options, [](const Graph&) { return 3; },
      [k](const Graph& g) { return k_factor(g, k).exists; });
  return report;
}

std::vector<ThresholdComparison> compare_thresholds(int r_max) {
  std::vector<ThresholdComparison> out;
  for (int r = 4; r <= r_max; r += 2) {
    for (int j = 2; j <= r; j += 2) out.push_back({r, j, rho1(r, j).value, rho2(r, j).value});
  }
  return out;
}

RootOrdering root_ordering(int r) {
  if (r < 4 || is_odd(r)) throw DomainError("root ordering: requires even r >= 4");
  RootOrdering ro;
  ro.r = r;
  ro.f1 = largest_root(cubic_family(CubicFamily::F1, r));
  ro.f2 = largest_root(cubic_family(CubicFamily::F2, r));
  ro.f3 = largest_root(cubic_family(CubicFamily::F3, r));
  ro.lambda_path = lambda1(build(spec_of(Family::ExtremalOddM2, r, 2)));
  ro.lambda_adjacent = lambda1(build(spec_of(Family::OddM2Adjacent, r, 2)));
  ro.lambda_star = lambda1(build(spec_of(Family::OddM2Star, r, 2)));
  std::vector<std::pair<double, std::string>> named{{ro.f1, "f1"}, {ro.f2, "f2"}, {ro.f3, "f3"}};
  std::sort(named.begin(), named.end());
  ro.order = named[0].second + " < " + named[1].second + " < " + named[2].second;
  return ro;
}

// ---------------------------------------------------------------------------
// Interlacing.

InterlacingReport subgraph_interlacing_trials(int trials, std::uint64_t seed, double tolerance) {
  Rng rng(seed);
  InterlacingReport report;
  report.worst_gap = std::numeric_limits<double>::infinity();
  std::uniform_int_distribution<int> order(4, 16);
  std::uniform_real_distribution<double> density(0.15, 0.7);
  std::bernoulli_distribution removed(0.3);
  std::bernoulli_distribution dropped(0.3);
  while (static_cast<int>(report.trials) < trials) {
    const int n = order(rng);
    const Graph g = random_gnp(n, density(rng), rng);
    VertexSet rest;
    for (int v = 0; v < n; ++v) {
      if (!removed(rng)) rest.push_back(v);
    }
    if (rest.empty()) continue;
    std::vector<VertexSet> comps = connected_components(induced_subgraph(g, rest));
    for (VertexSet& c : comps) {
      for (Vertex& v : c) v = rest[v];
    }
    std::shuffle(comps.begin(), comps.end(), rng);
    const int s = std::uniform_int_distribution<int>(
        1, std::min<int>(4, static_cast<int>(comps.size())))(rng);
    std::vector<VertexSet> groups(comps.begin(), comps.begin() + s);
    std::uniform_int_distribution<int> which(0, s - 1);
    for (std::size_t c = s; c < comps.size(); ++c) {
      if (dropped(rng)) continue;
      VertexSet& target = groups[which(rng)];
      target.insert(target.end(), comps[c].begin(), comps[c].end());
    }
    double rhs = std::numeric_limits<double>::infinity();
    for (VertexSet& grp : groups) {
      std::sort(grp.begin(), grp.end());
      rhs = std::min(rhs, lambda1(induced_subgraph(g, grp)));
    }
    const double lhs = eigenvalues(g).lambda(s);
    ++report.trials;
    report.worst_gap = std::min(report.worst_gap, lhs - rhs);
    if (lhs < rhs - tolerance) ++report.violations;
  }
  return report;
}

InterlacingReport quotient_interlacing_trials(int trials, std::uint64_t seed, double tolerance) {
  Rng rng(seed);
  InterlacingReport report;
  report.worst_gap = std::numeric_limits<double>::infinity();
  std::uniform_int_distribution<int> order(2, 16);
  std::uniform_real_distribution<double> density(0.1, 0.8);
  for (int t = 0; t < trials; ++t) {
    const int n = order(rng);
    const Graph g = random_gnp(n, density(rng), rng);
    const int s = std::uniform_int_distribution<int>(1, std::min(n, 5))(rng);
    VertexSet perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> parts(s);
    std::uniform_int_distribution<int> which(0, s - 1);
    for (int i = 0; i < n; ++i) parts[i < s ? i : which(rng)].push_back(perm[i]);
    const QuotientMatrix q = quotient_matrix(g, std::move(parts));
    const double gap = lambda1(g) - quotient_eigenvalues(q).front();
    ++report.trials;
    report.worst_gap = std::min(report.worst_gap, gap);
    if (gap < -tolerance) ++report.violations;
  }
  return report;
}

}  // namespace regfactor
