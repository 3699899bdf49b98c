// Copyright 2026 The regfactor Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "regfactor/cli.hpp"
#include "regfactor/constructions.hpp"
#include "regfactor/error.hpp"
#include "regfactor/factor.hpp"
#include "regfactor/generators.hpp"
#include "regfactor/graph.hpp"
#include "regfactor/graph6.hpp"
#include "regfactor/lab.hpp"
#include "regfactor/spectral.hpp"
#include "regfactor/tutte.hpp"

namespace regfactor::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 15 significant digits; non-finite values become null.
Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json nums(const std::vector<double>& values) {
  Json a = Json::array();
  for (double v : values) a.push_back(num(v));
  return a;
}

Json edge_list(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

Json st_json(const STPair& st) { return {{"s", st.s}, {"t", st.t}}; }

Json report_json(const CampaignReport& r) {
  Json metrics = Json::object();
  for (const Metric& m : r.metrics) metrics[m.name] = num(m.value);
  return {{"corpus", r.corpus},
          {"graphs_tested", r.graphs_tested},
          {"hypothesis_satisfying", r.hypothesis_satisfying},
          {"conclusion_satisfying", r.conclusion_satisfying},
          {"counterexamples", r.counterexamples},
          {"metrics", metrics},
          {"notes", r.notes},
          {"passed", r.passed()}};
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("invalid vertex '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Input {
  std::vector<std::pair<std::string, Graph>> graphs;
  bool batch = false;
};

void read_lines(std::istream& is, const std::string& source, Input& input) {
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    line = trim(line);
    if (line.empty()) continue;
    try {
      input.graphs.emplace_back(line, parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(source + " line " + std::to_string(number) + ": " +
                           std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")),
                       e.offset());
    }
  }
}

// Positional graph6 strings, file paths, or standard input lines.
Input load_graphs(const std::vector<std::string>& args, std::istream& in) {
  Input input;
  if (args.empty()) {
    read_lines(in, "stdin", input);
    input.batch = true;
  } else {
    for (const std::string& arg : args) {
      std::error_code ec;
      if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream file(arg);
        if (!file) throw UsageError("cannot read file '" + arg + "'");
        read_lines(file, arg, input);
        input.batch = true;
      } else {
        input.graphs.emplace_back(arg, parse_graph6(arg));
      }
    }
    input.batch = input.batch || args.size() > 1;
  }
  if (input.graphs.empty()) {
    throw UsageError("no graph given: pass graph6 text, a file of graph6 lines, or lines on stdin");
  }
  return input;
}

Json per_graph(const Input& input, const std::function<Json(const std::string&, const Graph&)>& fn) {
  if (!input.batch) return fn(input.graphs.front().first, input.graphs.front().second);
  Json results = Json::array();
  for (const auto& [text, g] : input.graphs) results.push_back(fn(text, g));
  return {{"results", results}};
}

Corpus corpus_from_file(const std::string& path, std::istream& in) {
  Input input = load_graphs({path}, in);
  Corpus corpus;
  corpus.description = "graph6 lines from " + path;
  for (auto& [text, g] : input.graphs) corpus.graphs.push_back(std::move(g));
  return corpus;
}

std::vector<int> orders_up_to(int lo, int hi) {
  std::vector<int> orders;
  for (int n = lo; n <= hi; ++n) orders.push_back(n);
  return orders;
}

// ---------------------------------------------------------------------------
// Human-readable rendering of a payload.

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const bool flat = value.is_primitive() ||
                        (value.is_array() && std::all_of(value.begin(), value.end(),
                                                         [](const Json& x) { return x.is_number() || x.is_boolean(); }));
      if (value.is_primitive()) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else if (flat) {
        out << pad << key << ":";
        for (const Json& x : value) out << ' ' << scalar_text(x);
        out << '\n';
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& x : j) {
      if (x.is_primitive()) {
        out << pad << "- " << scalar_text(x) << '\n';
      } else if (x.is_array()) {
        out << pad << "-";
        for (const Json& y : x) out << ' ' << (y.is_primitive() ? scalar_text(y) : y.dump());
        out << '\n';
      } else {
        out << pad << "-\n";
        render(x, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

// ---------------------------------------------------------------------------

struct Options {
  bool human = false;
  bool json = false;
  std::vector<std::string> graphs;
  int r = 0;
  int m = 0;
  int k = 1;
  int n = 0;
  int size = 0;
  int count = 1;
  int samples = 200;
  int nmax = 10;
  int rmax = 12;
  int trials = 10000;
  int workers = 1;
  int cap = kDefaultOracleCap;
  std::uint64_t seed = 1;
  double tolerance = kDefaultTolerance;
  double p = 0.5;
  std::string parity;
  std::string family;
  std::string cycles;
  std::string s_list;
  std::string t_list;
  std::string corpus;
  bool certificate = false;
  bool exhaustive = false;
};

Json threshold_payload(const Options& o) {
  std::string fn;
  if (!o.family.empty() && !o.parity.empty()) {
    throw UsageError("give either --parity or --family, not both");
  }
  if (o.parity == "even" || o.family == "rho1") {
    fn = "rho1";
  } else if (o.parity == "odd" || o.family == "rho2") {
    fn = "rho2";
  } else if (o.parity.empty() && o.family.empty()) {
    throw UsageError("threshold needs --parity even|odd or --family rho1|rho2");
  } else {
    throw UsageError("unknown threshold selector '" + o.parity + o.family + "'");
  }
  const SpectralThreshold t = fn == "rho1" ? rho1(o.r, o.m) : rho2(o.r, o.m);
  return {{"function", fn},
          {"r", t.r},
          {"m", t.m},
          {"value", num(t.value)},
          {"kind", std::string(kind_name(t.kind))}};
}

Json extremal_payload(const Options& o) {
  const std::optional<Family> family = family_from_name(o.family);
  if (!family) throw UsageError("unknown construction family '" + o.family + "'");
  ConstructionSpec spec;
  spec.family = *family;
  spec.r = o.r;
  spec.m = o.m;
  if (o.m == 0 && *family == Family::ExtremalOddM1) spec.m = 1;
  if (o.m == 0 && (*family == Family::ExtremalOddM2 || *family == Family::OddM2Adjacent ||
                   *family == Family::OddM2Star)) {
    spec.m = 2;
  }
  spec.size = o.size;
  spec.cycles = parse_vertex_list(o.cycles);
  const Graph g = build(spec);
  const Spectrum sp = eigenvalues(g);
  Json j = {{"family", std::string(family_name(*family))},
            {"r", spec.r},
            {"m", spec.m},
            {"graph6", to_graph6(g)},
            {"n", g.order()},
            {"e", g.size()},
            {"degrees", g.degrees()},
            {"connected", is_connected(g)},
            {"regular", g.is_regular()},
            {"lambda1", g.order() > 0 ? num(sp.lambda(1)) : Json(nullptr)}};
  const bool extremal_family = *family != Family::CompleteK && *family != Family::MatchingM &&
                               *family != Family::CycleUnionC && *family != Family::StarK1s &&
                               *family != Family::PathP;
  if (extremal_family) {
    const QuotientMatrix q = quotient_matrix(g, extremal_partition(spec));
    Json rows = Json::array();
    for (const auto& row : q.b) rows.push_back(nums(row));
    j["quotient"] = {{"parts", q.parts},
                     {"matrix", rows},
                     {"equitable", is_equitable(g, q.parts)},
                     {"eigenvalues", nums(quotient_eigenvalues(q))}};
    std::optional<SpectralThreshold> t;
    if (*family == Family::ExtremalEven) {
      t = rho1(o.r, o.m);
    } else if (*family == Family::ExtremalOddM3 || *family == Family::ExtremalOddM1) {
      t = rho2(spec.r, spec.m);
    } else if (*family == Family::ExtremalOddM2) {
      t = rho2(spec.r, 2);
    }
    if (t) {
      j["threshold"] = {{"value", num(t->value)}, {"kind", std::string(kind_name(t->kind))}};
    }
  }
  return j;
}

Json factor_payload(const Options& o, const std::string& text, const Graph& g) {
  FactorOptions fo;
  fo.with_certificate = o.certificate;
  const FactorReport rep = k_factor(g, o.k, fo);
  Json j = {{"graph", text},
            {"k", o.k},
            {"exists", rep.exists},
            {"edges", edge_list(rep.edges)},
            {"deficiency", rep.deficiency}};
  if (rep.certificate) j["certificate"] = st_json(*rep.certificate);
  return j;
}

Json deficiency_payload(const Options& o, const std::string& text, const Graph& g) {
  Json j = {{"graph", text}, {"k", o.k}};
  if (o.certificate) {
    FactorOptions fo;
    fo.with_certificate = true;
    const FactorReport rep = k_factor(g, o.k, fo);
    j["deficiency"] = rep.deficiency;
    if (rep.certificate) j["certificate"] = st_json(*rep.certificate);
  } else {
    j["deficiency"] = deficiency(g, o.k);
  }
  return j;
}

Json critical_payload(const Options& o, const std::string& text, const Graph& g) {
  const CriticalityReport rep = criticality(g, o.k);
  Json vertices = Json::array();
  int witnessed = 0;
  for (std::size_t v = 0; v < rep.near_factor_degree.size(); ++v) {
    const auto& d = rep.near_factor_degree[v];
    if (d) ++witnessed;
    vertices.push_back({{"vertex", v}, {"degree", d ? Json(*d) : Json(nullptr)}});
  }
  return {{"graph", text},
          {"k", o.k},
          {"has_k_factor", rep.has_k_factor},
          {"critical", rep.critical},
          {"witnessed_vertices", witnessed},
          {"vertices", vertices}};
}

Json delta_payload(const Options& o, const std::string& text, const Graph& g) {
  const STPair st{parse_vertex_list(o.s_list), parse_vertex_list(o.t_list)};
  const DeltaBreakdown d = delta(g, o.k, st);
  return {{"graph", text}, {"k", o.k},          {"s", st.s},
          {"t", st.t},     {"k_s", d.k_s},      {"degree_sum", d.degree_sum},
          {"k_t", d.k_t},  {"tau", d.tau},      {"delta", d.delta},
          {"parity_ok", ((d.delta - static_cast<long long>(o.k) * g.order()) % 2) == 0}};
}

Json oracle_deficiency_payload(const Options& o, const std::string& text, const Graph& g) {
  const DeficiencyWitness w = brute_force_deficiency(g, o.k, o.cap);
  return {{"graph", text},
          {"k", o.k},
          {"deficiency", w.deficiency},
          {"certificate", st_json(w.pair)},
          {"delta", delta(g, o.k, w.pair).delta}};
}

Json graphs_json(const std::vector<Graph>& graphs) {
  Json a = Json::array();
  for (const Graph& g : graphs) a.push_back(to_graph6(g));
  return {{"count", graphs.size()}, {"graphs", a}};
}

ClassParity parse_parity(const std::string& p) {
  if (p == "even") return ClassParity::Even;
  if (p == "odd") return ClassParity::Odd;
  throw UsageError("--parity must be 'even' or 'odd'");
}

CampaignOptions campaign_options(const Options& o) {
  CampaignOptions c;
  c.tolerance = o.tolerance;
  c.seed = o.seed;
  c.workers = o.workers;
  return c;
}

Corpus sweep_corpus(const Options& o, std::istream& in) {
  if (!o.corpus.empty()) return corpus_from_file(o.corpus, in);
  const std::vector<int> orders = orders_up_to(o.r + 1, o.nmax);
  return regular_corpus(o.r, orders, o.samples, o.seed);
}

struct Outcome {
  Json payload;
  bool counterexample = false;
};

Outcome campaign(const CampaignReport& rep) { return {report_json(rep), !rep.passed()}; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  Options o;
  CLI::App app{"Spectral conditions for regular factors in regular graphs", "regfactor"};
  app.require_subcommand(1);
  // Subcommands inherit this, so the global flags work in any position.
  app.fallthrough();
  app.add_flag("--human", o.human, "Readable text instead of JSON");
  app.add_flag("--json", o.json, "JSON envelope output (default)");

  Outcome result;
  auto on = [&result](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([fn, &result] { result = fn(); });
  };
  auto add_graphs = [&](CLI::App* sub) {
    sub->add_option("graph", o.graphs, "graph6 strings or files of graph6 lines (default: stdin)");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Target degree")->required()->check(CLI::NonNegativeNumber);
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues, descending");
  add_graphs(spectrum);
  on(spectrum, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [](const std::string& text, const Graph& g) {
      return Json{{"graph", text},
                  {"n", g.order()},
                  {"e", g.size()},
                  {"eigenvalues", nums(eigenvalues(g).values)}};
    })};
  });

  CLI::App* threshold = app.add_subcommand("threshold", "Spectral threshold rho1 or rho2");
  threshold->add_option("--r", o.r, "Maximum degree")->required();
  threshold->add_option("--m", o.m, "Degree deficit bound")->required();
  threshold->add_option("--parity", o.parity, "even (rho1) or odd (rho2)");
  threshold->add_option("--family", o.family, "rho1 or rho2");
  on(threshold, [&] { return Outcome{threshold_payload(o)}; });

  CLI::App* extremal = app.add_subcommand("extremal", "Build a named construction");
  extremal->add_option("--family", o.family, "Construction family name")->required();
  extremal->add_option("--r", o.r, "Maximum degree");
  extremal->add_option("--m", o.m, "Degree deficit");
  extremal->add_option("--size", o.size, "Size parameter for elementary families");
  extremal->add_option("--cycles", o.cycles, "Comma-separated cycle lengths");
  on(extremal, [&] { return Outcome{extremal_payload(o)}; });

  CLI::App* factor = app.add_subcommand("factor", "k-factor existence, edges and deficiency");
  add_k(factor);
  factor->add_flag("--certificate", o.certificate, "Attach an optimal (S,T) when none exists");
  add_graphs(factor);
  on(factor, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [&](const std::string& t, const Graph& g) {
      return factor_payload(o, t, g);
    })};
  });

  CLI::App* def = app.add_subcommand("deficiency", "k-deficiency via maximum matching");
  add_k(def);
  def->add_flag("--certificate", o.certificate, "Attach an optimal (S,T)");
  add_graphs(def);
  on(def, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [&](const std::string& t, const Graph& g) {
      return deficiency_payload(o, t, g);
    })};
  });

  CLI::App* critical = app.add_subcommand("critical", "k-criticality with per-vertex witnesses");
  add_k(critical);
  add_graphs(critical);
  on(critical, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [&](const std::string& t, const Graph& g) {
      return critical_payload(o, t, g);
    })};
  });

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force Tutte/Lovasz oracle");
  oracle->require_subcommand(1);
  CLI::App* odelta = oracle->add_subcommand("delta", "delta(S,T) and its terms");
  add_k(odelta);
  odelta->add_option("--s", o.s_list, "Comma-separated S");
  odelta->add_option("--t", o.t_list, "Comma-separated T");
  add_graphs(odelta);
  on(odelta, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [&](const std::string& t, const Graph& g) {
      return delta_payload(o, t, g);
    })};
  });
  CLI::App* odef = oracle->add_subcommand("deficiency", "max -delta over all disjoint (S,T)");
  add_k(odef);
  odef->add_option("--cap", o.cap, "Largest order enumerated");
  add_graphs(odef);
  on(odef, [&] {
    const Input input = load_graphs(o.graphs, in);
    return Outcome{per_graph(input, [&](const std::string& t, const Graph& g) {
      return oracle_deficiency_payload(o, t, g);
    })};
  });

  CLI::App* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->require_subcommand(1);
  auto campaign_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--tolerance", o.tolerance, "Threshold comparison tolerance");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto sweep_flags = [&](CLI::App* sub) {
    sub->add_option("--nmax", o.nmax, "Largest order in the corpus");
    sub->add_option("--samples", o.samples, "Random graphs per order above 10");
    sub->add_option("--corpus", o.corpus, "File of graph6 lines instead of the generated corpus");
  };
  for (const char* name : {"thm2.1", "thm2.2"}) {
    CLI::App* sub = verify->add_subcommand(name, "Class minimality of the threshold");
    sub->add_option("--r", o.r, "Maximum degree")->required();
    sub->add_option("--m", o.m, "Degree deficit bound")->required();
    sub->add_option("--samples", o.samples, "Random class members");
    campaign_flags(sub);
    const bool even = std::string(name) == "thm2.1";
    on(sub, [&, even] {
      const CampaignOptions c = campaign_options(o);
      return campaign(even ? verify_thm_2_1(o.r, o.m, o.samples, c)
                           : verify_thm_2_2(o.r, o.m, o.samples, c));
    });
  }
  for (const char* name : {"thm3.2", "thm3.3"}) {
    CLI::App* sub = verify->add_subcommand(name, "Eigenvalue condition for a k-factor");
    sub->add_option("--r", o.r, "Degree of regularity")->required();
    sub->add_option("--k", o.k, "Factor degree")->required();
    sub->add_option("--m", o.m, "Parameter m")->required();
    sweep_flags(sub);
    campaign_flags(sub);
    const bool two = std::string(name) == "thm3.2";
    on(sub, [&, two] {
      const Corpus corpus = sweep_corpus(o, in);
      const CampaignOptions c = campaign_options(o);
      return campaign(two ? verify_thm_3_2(o.r, o.k, o.m, corpus, c)
                          : verify_thm_3_3(o.r, o.k, o.m, corpus, c));
    });
  }
  CLI::App* lemma = verify->add_subcommand("lemma3.1", "Dense-subgraph structure without a k-factor");
  lemma->add_option("--r", o.r, "Degree of regularity")->required();
  lemma->add_option("--m", o.m, "Largest m tried (default r+1)");
  sweep_flags(lemma);
  campaign_flags(lemma);
  on(lemma, [&] {
    const Corpus corpus = sweep_corpus(o, in);
    return campaign(verify_lemma_3_1(corpus, o.m > 0 ? o.m : o.r + 1, campaign_options(o)));
  });
  CLI::App* thresholds = verify->add_subcommand("thresholds", "rho1 and rho2 side by side");
  thresholds->add_option("--rmax", o.rmax, "Largest even r");
  on(thresholds, [&] {
    Json rows = Json::array();
    bool all = true;
    for (const ThresholdComparison& c : compare_thresholds(o.rmax)) {
      all = all && c.rho1 <= c.rho2;
      rows.push_back({{"r", c.r},
                      {"m", c.m},
                      {"rho1", num(c.rho1)},
                      {"rho2", num(c.rho2)},
                      {"rho1_le_rho2", c.rho1 <= c.rho2}});
    }
    return Outcome{{{"rows", rows}, {"rho1_le_rho2_everywhere", all}}};
  });
  CLI::App* ordering = verify->add_subcommand("ordering", "Greatest roots of the m = 2 cubics");
  ordering->add_option("--r", o.r, "Even maximum degree")->required();
  on(ordering, [&] {
    const RootOrdering ro = root_ordering(o.r);
    return Outcome{{{"r", ro.r},
                    {"f1", num(ro.f1)},
                    {"f2", num(ro.f2)},
                    {"f3", num(ro.f3)},
                    {"order", ro.order},
                    {"lambda1_path_case", num(ro.lambda_path)},
                    {"lambda1_adjacent_case", num(ro.lambda_adjacent)},
                    {"lambda1_star_case", num(ro.lambda_star)}}};
  });
  CLI::App* inter = verify->add_subcommand("interlacing", "Random interlacing trials");
  inter->add_option("--trials", o.trials, "Trials of each kind");
  campaign_flags(inter);
  on(inter, [&] {
    const InterlacingReport a = subgraph_interlacing_trials(o.trials, o.seed, o.tolerance);
    const InterlacingReport b = quotient_interlacing_trials(o.trials, o.seed + 1, o.tolerance);
    auto j = [](const InterlacingReport& x) {
      return Json{{"trials", x.trials}, {"violations", x.violations}, {"worst_gap", num(x.worst_gap)}};
    };
    return Outcome{{{"subgraph", j(a)}, {"quotient", j(b)}}, a.violations + b.violations > 0};
  });

  CLI::App* gen = app.add_subcommand("gen", "Generate graphs as graph6");
  gen->require_subcommand(1);
  CLI::App* gregular = gen->add_subcommand("regular", "Connected r-regular graphs");
  gregular->add_option("--n", o.n, "Order")->required();
  gregular->add_option("--r", o.r, "Degree")->required();
  gregular->add_option("--count", o.count, "Number of samples");
  gregular->add_option("--seed", o.seed, "Random seed");
  gregular->add_flag("--exhaustive", o.exhaustive, "Every isomorphism class (n <= 10)");
  on(gregular, [&] {
    if (o.exhaustive) return Outcome{graphs_json(enumerate_connected_regular(o.n, o.r))};
    std::vector<Graph> out;
    for (int i = 0; i < o.count; ++i) out.push_back(random_regular(o.n, o.r, o.seed + i));
    return Outcome{graphs_json(out)};
  });
  CLI::App* gclass = gen->add_subcommand("class", "Random members of H(r, m)");
  gclass->add_option("--r", o.r, "Maximum degree")->required();
  gclass->add_option("--m", o.m, "Degree deficit bound")->required();
  gclass->add_option("--parity", o.parity, "even or odd")->required();
  gclass->add_option("--count", o.count, "Number of samples");
  gclass->add_option("--seed", o.seed, "Random seed");
  on(gclass, [&] {
    const ClassParity parity = parse_parity(o.parity);
    std::vector<Graph> out;
    for (int i = 0; i < o.count; ++i) {
      out.push_back(random_class_member(o.r, o.m, parity, o.seed + i));
    }
    return Outcome{graphs_json(out)};
  });
  CLI::App* gconn = gen->add_subcommand("connected", "Every connected graph on n vertices");
  gconn->add_option("--n", o.n, "Order (at most 9)")->required();
  on(gconn, [&] { return Outcome{graphs_json(enumerate_connected(o.n))}; });
  CLI::App* ggnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n, p)");
  ggnp->add_option("--n", o.n, "Order")->required();
  ggnp->add_option("--p", o.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  ggnp->add_option("--count", o.count, "Number of samples");
  ggnp->add_option("--seed", o.seed, "Random seed");
  on(ggnp, [&] {
    Rng rng(o.seed);
    std::vector<Graph> out;
    for (int i = 0; i < o.count; ++i) out.push_back(random_gnp(o.n, o.p, rng));
    return Outcome{graphs_json(out)};
  });

  std::string status = "ok";
  int code = kOk;
  std::string help;
  std::vector<std::string> argv_store{"regfactor"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  auto fail = [&](const std::string& kind, const std::string& message) {
    status = "error";
    code = kUsage;
    result.payload = {{"kind", kind}, {"message", message}};
    err << "regfactor: " << kind << " error: " << message << '\n';
  };
  try {
    const auto first = std::find_if(args.begin(), args.end(),
                                    [](const std::string& a) { return a.rfind("-", 0) != 0; });
    if (first != args.end() && app.get_subcommand_no_throw(*first) == nullptr) {
      std::string known;
      for (const CLI::App* sub : app.get_subcommands({})) known += " " + sub->get_name();
      throw UsageError("unknown subcommand '" + *first + "'; expected one of:" + known);
    }
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (result.counterexample) {
      status = "counterexample";
      code = kCounterexample;
    }
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream text;
    app.exit(e, text, text);
    help = text.str();
    result.payload = {{"help", help}};
  } catch (const CLI::ParseError& e) {
    fail("usage", e.what());
  } catch (const UsageError& e) {
    fail("usage", e.what());
  } catch (const ParseError& e) {
    fail("parse", e.what());
  } catch (const DomainError& e) {
    fail("domain", e.what());
  } catch (const SizeLimitError& e) {
    fail("size-limit", e.what());
  } catch (const GenerationError& e) {
    fail("generation", e.what());
  } catch (const std::exception& e) {
    fail("internal", e.what());
  }

  std::string command;
  for (const CLI::App* level = &app; !level->get_subcommands().empty();) {
    level = level->get_subcommands().front();
    command += (command.empty() ? "" : " ") + level->get_name();
  }
  if (command.empty() && !args.empty()) command = args.front();
  if (o.human) {
    if (!help.empty()) {
      out << help;
    } else {
      out << command << ": " << status << '\n';
      render(result.payload, out, 2);
    }
  } else {
    const Json envelope = {{"schema", kSchema},
                           {"version", kVersion},
                           {"command", command},
                           {"argv", args},
                           {"status", status},
                           {"payload", result.payload}};
    out << envelope.dump() << '\n';
  }
  return code;
}

}  // namespace regfactor::cli
