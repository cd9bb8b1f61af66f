#include "switchgraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "switchgraph/binary_matrix.hpp"
#include "switchgraph/error.hpp"
#include "switchgraph/graph.hpp"
#include "switchgraph/optimize.hpp"
#include "switchgraph/oracle.hpp"
#include "switchgraph/reach.hpp"
#include "switchgraph/rng.hpp"

namespace switchgraph::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

void append_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

BinaryMatrix load_matrix(const std::string& path) { return parse_matrix(read_text(path)); }

Json json_of(const SwitchCoord& c) { return Json::array({c.i + 1, c.j + 1, c.k + 1, c.l + 1}); }

Json json_of(const IntGrid& g) {
  Json rows = Json::array();
  for (const auto& row : g.to_rows()) rows.push_back(row);
  return rows;
}

Json json_of(const MatrixClass& c) {
  return Json{{"nested", c.nested},
              {"anti_nested", c.anti_nested},
              {"zebra", c.zebra},
              {"zebra_split_h", c.zebra_split_h},
              {"zebra_split_v", c.zebra_split_v},
              {"anti_zebra", c.anti_zebra},
              {"anti_zebra_split_h", c.anti_zebra_split_h},
              {"anti_zebra_split_v", c.anti_zebra_split_v},
              {"complement_of_split", c.complement_of_split_zebra_or_antizebra},
              {"degenerate_split", c.degenerate_split}};
}

Json json_of(const CheckResult& c) {
  return Json{{"status", to_string(c.status)},
              {"checked", c.checked},
              {"counterexamples", c.counterexamples}};
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: " + token);
    }
    if (used != token.size()) throw ParseError("not an integer: " + token);
    out.push_back(v);
  }
  return out;
}

std::string with_suffix(const std::string& path, std::size_t trial, std::size_t trials) {
  if (trials <= 1 || path.empty()) return path;
  const std::filesystem::path p(path);
  const std::string stem = (p.parent_path() / p.stem()).string();
  return stem + "." + std::to_string(trial) + p.extension().string();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::size_t n = 100;
  double p = 0.2;
  std::size_t side = 10;
  double rewire = 0.1;
  std::uint64_t seed = 1;
  std::string margins;
  std::string out;
  bool sort = false;
};

int cmd_gen(const std::string& kind, const GenArgs& a, std::ostream& out) {
  BinaryMatrix m;
  if (kind == "er") {
    m = gen_erdos_renyi(a.n, a.p, a.seed).adjacency();
  } else if (kind == "grid") {
    m = gen_small_world(a.side, a.rewire, a.seed).adjacency();
  } else {
    std::vector<int> r, c;
    read_margins_file(a.margins, r, c);
    m = gen_split_zebra(r, c);
  }
  if (a.sort && kind != "zebra") m = sort_by_degree(Graph(m)).first.adjacency();
  if (a.out.empty()) {
    out << format_matrix(m);
  } else {
    write_text(a.out, format_matrix(m));
  }
  return kOk;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string input;
  double tol = SpectralOptions{}.tol;
  std::size_t max_iter = SpectralOptions{}.max_iter;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const BinaryMatrix m = load_matrix(a.input);
  Json j;
  j["schema"] = 1;
  j["config"] = {{"input", a.input}, {"tol", a.tol}, {"max_iter", a.max_iter}};
  j["p"] = m.rows();
  j["q"] = m.cols();
  j["row_sums"] = std::vector<int>(m.row_sums().begin(), m.row_sums().end());
  j["col_sums"] = std::vector<int>(m.col_sums().begin(), m.col_sums().end());
  j["potential"] = potential(m);
  j["checkerboards"] = {{"positive", count_checkerboards(m, Sign::positive)},
                        {"negative", count_checkerboards(m, Sign::negative)}};
  j["class"] = json_of(classify(m));
  j["zebra_distance"] = zebra_distance(m);
  j["anti_zebra_distance"] = anti_zebra_distance(m);

  std::optional<Graph> g;
  try {
    g.emplace(m);
  } catch (const std::invalid_argument&) {
  }
  j["graph"] = g.has_value();
  if (!g) {
    print_json(out, j);
    return kOk;
  }
  const Graph sorted = sort_by_degree(*g).first;
  const SpectralReport rep = spectral_radius(*g, {a.tol, a.max_iter});
  j["n"] = g->n();
  j["m"] = g->m();
  j["degrees"] = std::vector<int>(g->degrees().begin(), g->degrees().end());
  j["degree_sorted"] = g->degree_sorted();
  j["lambda1"] = rep.lambda1;
  j["converged"] = rep.converged;
  j["iterations"] = rep.iterations;
  j["M1"] = rep.M1;
  j["M2"] = rep.M2;
  j["Z1"] = rep.Z1;
  j["Z2"] = optional_json(rep.Z2);
  j["r"] = optional_json(rep.r);
  j["sym_checkerboards"] = {{"positive", count_sym_checkerboards(sorted, Sign::positive)},
                            {"negative", count_sym_checkerboards(sorted, Sign::negative)}};
  print_json(out, j);
  return g->m() == 0 ? kUnknown : kOk;
}

// ---- reach / path ---------------------------------------------------------

struct ReachArgs {
  std::string a;
  std::string b;
  std::size_t max_states = ReachOptions{}.max_states;
  bool no_heuristic = false;
};

int exit_for(ReachStatus s) {
  if (is_reachable(s)) return kOk;
  if (is_unreachable(s)) return kNegative;
  return kUnknown;
}

int cmd_reach(const ReachArgs& a, bool path_only, std::ostream& out) {
  const BinaryMatrix ma = load_matrix(a.a);
  const BinaryMatrix mb = load_matrix(a.b);
  const ReachVerdict v = build_path(ma, mb, {a.max_states, !a.no_heuristic});
  if (path_only) {
    if (v.path) {
      for (const auto& c : *v.path) {
        out << c.i + 1 << ' ' << c.j + 1 << ' ' << c.k + 1 << ' ' << c.l + 1 << '\n';
      }
    }
    return exit_for(v.status);
  }
  Json j;
  j["schema"] = 1;
  j["config"] = {{"a", a.a}, {"b", a.b}, {"max_states", a.max_states},
                 {"heuristic", !a.no_heuristic}};
  j["status"] = to_string(v.status);
  j["conditions"] = {{"i", v.conditions.cond_i},
                     {"ii", v.conditions.cond_ii},
                     {"iii", v.conditions.cond_iii}};
  j["T"] = json_of(v.conditions.t.coeffs);
  Json path = Json::array();
  if (v.path) {
    for (const auto& c : *v.path) path.push_back(json_of(c));
  }
  j["path"] = path;
  j["path_length"] = v.path ? Json(v.path->size()) : Json(nullptr);
  j["explored_states"] = v.explored_states ? Json(*v.explored_states) : Json(nullptr);
  print_json(out, j);
  return exit_for(v.status);
}

// ---- optimize -------------------------------------------------------------

struct OptimizeArgs {
  std::string input;
  std::string gen;
  std::size_t n = 100;
  double p = 0.2;
  std::size_t side = 10;
  double rewire = 0.1;
  std::uint64_t gen_seed = 1;
  std::size_t budget = RunOptions{}.budget;
  std::size_t lambda_every = RunOptions{}.lambda_every;
  std::uint64_t seed = RunOptions{}.seed;
  std::size_t rejection_cap = 0;
  std::size_t trials = 1;
  std::size_t jobs = 1;
  std::string out_csv;
  std::string out_initial;
  std::string out_final;
};

Json optimize_config(const OptimizeArgs& a) {
  Json c;
  c["input"] = a.input.empty() ? Json(nullptr) : Json(a.input);
  c["gen"] = a.gen.empty() ? Json(nullptr) : Json(a.gen);
  if (a.gen == "er") {
    c["n"] = a.n;
    c["p"] = a.p;
  } else if (a.gen == "grid") {
    c["side"] = a.side;
    c["rewire"] = a.rewire;
  }
  if (!a.gen.empty()) c["gen_seed"] = a.gen_seed;
  c["budget"] = a.budget;
  c["lambda_every"] = a.lambda_every;
  c["seed"] = a.seed;
  c["rejection_cap"] = a.rejection_cap;
  c["trials"] = a.trials;
  c["rng"] = "mt19937_64";
  return c;
}

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  Graph g0 = Graph::empty(1);
  if (!a.input.empty()) {
    g0 = Graph(load_matrix(a.input));
  } else if (a.gen == "er") {
    g0 = gen_erdos_renyi(a.n, a.p, a.gen_seed);
  } else {
    g0 = gen_small_world(a.side, a.rewire, a.gen_seed);
  }
  g0 = sort_by_degree(g0).first;

  std::vector<Trajectory> results(a.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < a.trials; t = next++) {
      RunOptions opt;
      opt.budget = a.budget;
      opt.lambda_every = a.lambda_every;
      opt.seed = a.seed + t;
      opt.rejection_cap = a.rejection_cap;
      results[t] = run(g0, opt);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(a.jobs, 1, a.trials);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const Json config = optimize_config(a);
  Json trials = Json::array();
  for (std::size_t t = 0; t < a.trials; ++t) {
    const Trajectory& tr = results[t];
    const BinaryMatrix& fin = tr.final_graph.adjacency();
    const double cells = static_cast<double>(fin.rows() * fin.cols());
    trials.push_back({{"seed", tr.seed},
                      {"termination", to_string(tr.termination)},
                      {"steps", tr.steps.size()},
                      {"initial_lambda1", tr.initial_lambda1},
                      {"final_lambda1", tr.final_lambda1},
                      {"relative_increase",
                       tr.initial_lambda1 > 0 ? (tr.final_lambda1 - tr.initial_lambda1) /
                                                    tr.initial_lambda1
                                              : 0.0},
                      {"initial_M2", tr.initial_M2},
                      {"final_M2", tr.steps.empty() ? tr.initial_M2 : tr.steps.back().M2},
                      {"zebra_mismatch", static_cast<double>(zebra_distance(fin)) / cells},
                      {"anti_zebra_mismatch",
                       static_cast<double>(anti_zebra_distance(fin)) / cells}});
    if (!a.out_csv.empty()) {
      const std::string path = with_suffix(a.out_csv, t, a.trials);
      write_text(path, trajectory_csv(tr));
      Json side = config;
      side["seed"] = tr.seed;
      write_text(path + ".config.json", Json{{"schema", 1}, {"config", side}}.dump(2) + "\n");
    }
    if (!a.out_initial.empty()) {
      write_text(with_suffix(a.out_initial, t, a.trials), snapshot_render(tr.initial));
    }
    if (!a.out_final.empty()) {
      write_text(with_suffix(a.out_final, t, a.trials), snapshot_render(tr.final_graph));
    }
  }
  print_json(out, Json{{"schema", 1}, {"config", config}, {"n", g0.n()}, {"m", g0.m()},
                       {"trials", trials}});
  return kOk;
}

// ---- enumerate ------------------------------------------------------------

struct EnumerateArgs {
  std::string margins;
  std::string degrees;
  std::size_t max_states = 5000;
  bool reachability = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  Json j;
  j["schema"] = 1;
  j["config"] = {{"margins", a.margins.empty() ? Json(nullptr) : Json(a.margins)},
                 {"degrees", a.degrees.empty() ? Json(nullptr) : Json(a.degrees)},
                 {"max_states", a.max_states},
                 {"reachability", a.reachability}};
  MatrixClassDAG dag;
  std::optional<SinkMaxReport> sink_max;
  if (!a.margins.empty()) {
    std::vector<int> r, c;
    read_margins_file(a.margins, r, c);
    auto members = enumerate_margins(r, c);
    if (members.empty()) {
      j["count"] = 0;
      print_json(out, j);
      return kNegative;
    }
    if (members.size() > a.max_states) {
      j["count"] = members.size();
      j["error"] = "class exceeds --max-states";
      print_json(out, j);
      return kUnknown;
    }
    dag = build_dag(std::move(members));
  } else {
    const std::vector<int> d = parse_int_list(a.degrees);
    if (!is_graphical(d)) {
      j["count"] = 0;
      j["error"] = "degree sequence is not graphical";
      print_json(out, j);
      return kNegative;
    }
    std::vector<int> sorted = d;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    auto graphs = enumerate_degree_class(sorted);
    if (graphs.size() > a.max_states) {
      j["count"] = graphs.size();
      j["error"] = "class exceeds --max-states";
      print_json(out, j);
      return kUnknown;
    }
    dag = build_graph_dag(graphs);
    sink_max = verify_sink_max(graphs);
  }

  const StructureReport rep = verify_structure(dag);
  j["count"] = dag.vertices.size();
  j["arcs"] = dag.arcs.size();
  j["sources"] = dag.sources.size();
  j["sinks"] = dag.sinks.size();
  Json checks;
  bool ok = rep.ok();
  for (const auto& c : rep.checks) checks[c.name] = json_of(c);
  if (sink_max) {
    checks["max_at_sink"] = json_of(sink_max->max_at_sink);
    checks["eigenvector_order"] = json_of(sink_max->eigvec_order);
    j["lambda1_max"] = sink_max->max_all;
    j["lambda1_max_sinks"] = sink_max->max_sinks;
    ok = ok && sink_max->ok();
  }
  if (a.reachability && !dag.symmetric) {
    const ReachabilityReport rr = verify_reachability(dag);
    checks["necessity"] = json_of(rr.necessity);
    checks["sufficiency"] = json_of(rr.sufficiency);
    checks["verdicts"] = json_of(rr.verdicts);
    j["pairs"] = rr.pairs;
    j["reachable_pairs"] = rr.reachable_pairs;
    j["conjecture"] = {{"groups", rr.conjecture.groups.size()},
                       {"sufficiency_counterexamples", rr.conjecture.sufficiency_counterexamples},
                       {"necessity_counterexamples", rr.conjecture.necessity_counterexamples}};
    ok = ok && rr.ok();
  }
  Json sinks = Json::array();
  for (std::size_t s : dag.sinks) sinks.push_back(dag.vertices[s].key());
  j["sink_keys"] = sinks;
  j["checks"] = checks;
  print_json(out, j);
  return ok ? kOk : kNegative;
}

// ---- scan-conjecture --------------------------------------------------------

struct ScanArgs {
  bool all = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_rows = 4;
  std::size_t max_cols = 4;
  int max_entry = 3;
  std::size_t max_states = 5000;
  std::string report;
  std::string artifacts;
  std::size_t jobs = 1;
};

std::vector<Margins> random_margins(const ScanArgs& a) {
  Rng rng(a.seed);
  std::vector<Margins> out;
  std::size_t attempts = 0;
  while (out.size() < a.trials && attempts < a.trials * 1000) {
    ++attempts;
    const std::size_t p = 1 + rng.below(a.max_rows);
    const std::size_t q = 1 + rng.below(a.max_cols);
    std::vector<int> r(p), c(q);
    const int rmax = std::min<int>(a.max_entry, static_cast<int>(q));
    const int cmax = std::min<int>(a.max_entry, static_cast<int>(p));
    for (auto& x : r) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(rmax) + 1));
    for (auto& x : c) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(cmax) + 1));
    if (margins_feasible(r, c)) out.emplace_back(std::move(r), std::move(c));
  }
  return out;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const std::vector<Margins> cases =
      a.all ? feasible_margin_pairs(a.max_rows, a.max_cols, a.max_entry) : random_margins(a);

  struct Outcome {
    bool skipped = false;
    ReachabilityReport report;
  };
  std::vector<Outcome> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < cases.size(); t = next++) {
      auto members = enumerate_margins(cases[t].first, cases[t].second);
      if (members.size() > a.max_states) {
        results[t].skipped = true;
        continue;
      }
      results[t].report = verify_reachability(build_dag(std::move(members)));
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(a.jobs, 1, std::max<std::size_t>(1, cases.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t pairs = 0, skipped = 0, failures = 0, suff = 0, nec = 0, groups = 0, written = 0;
  std::string findings;
  ConjectureEvidence pooled;
  for (std::size_t t = 0; t < cases.size(); ++t) {
    const auto& res = results[t];
    if (res.skipped) {
      ++skipped;
      continue;
    }
    const auto& rr = res.report;
    pairs += rr.pairs;
    groups += rr.conjecture.groups.size();
    pooled.merge(rr.conjecture);
    suff += rr.conjecture.sufficiency_counterexamples;
    nec += rr.conjecture.necessity_counterexamples;
    if (!rr.ok()) ++failures;
    if (rr.conjecture.witnesses.empty() && rr.ok()) continue;
    Json finding{{"schema", 1},
                 {"row_sums", cases[t].first},
                 {"col_sums", cases[t].second},
                 {"sufficiency_counterexamples", rr.conjecture.sufficiency_counterexamples},
                 {"necessity_counterexamples", rr.conjecture.necessity_counterexamples},
                 {"assertions_ok", rr.ok()}};
    Json wit = Json::array();
    for (const auto& [wa, wb] : rr.conjecture.witnesses) {
      wit.push_back({{"A", wa.key()}, {"A_prime", wb.key()}});
      if (!a.artifacts.empty()) {
        std::filesystem::create_directories(a.artifacts);
        const std::string stem = a.artifacts + "/pair" + std::to_string(written++);
        write_text(stem + "_A.mat", format_matrix(wa));
        write_text(stem + "_Aprime.mat", format_matrix(wb));
      }
    }
    finding["witnesses"] = wit;
    findings += finding.dump() + "\n";
  }
  pooled.tally();
  Json pooled_witnesses = Json::array();
  for (const auto& [wa, wb] : pooled.witnesses) {
    pooled_witnesses.push_back({{"A", wa.key()}, {"A_prime", wb.key()}});
  }
  if (pooled.sufficiency_counterexamples + pooled.necessity_counterexamples > 0) {
    findings += Json{{"schema", 1},
                     {"pooled", true},
                     {"sufficiency_counterexamples", pooled.sufficiency_counterexamples},
                     {"necessity_counterexamples", pooled.necessity_counterexamples},
                     {"witnesses", pooled_witnesses}}
                    .dump() +
                "\n";
  }
  if (!a.report.empty() && !findings.empty()) append_text(a.report, findings);

  print_json(out, Json{{"schema", 1},
                       {"config", {{"all", a.all},
                                   {"trials", a.trials},
                                   {"seed", a.seed},
                                   {"max_rows", a.max_rows},
                                   {"max_cols", a.max_cols},
                                   {"max_entry", a.max_entry},
                                   {"max_states", a.max_states}}},
                       {"classes", cases.size() - skipped},
                       {"skipped", skipped},
                       {"pairs", pairs},
                       {"assertion_failures", failures},
                       {"per_class", {{"groups", groups},
                                      {"sufficiency_counterexamples", suff},
                                      {"necessity_counterexamples", nec}}},
                       {"pooled", {{"groups", pooled.groups.size()},
                                   {"sufficiency_counterexamples",
                                    pooled.sufficiency_counterexamples},
                                   {"necessity_counterexamples", pooled.necessity_counterexamples},
                                   {"witnesses", pooled_witnesses}}}});
  return failures == 0 ? kOk : kNegative;
}

}  // namespace

void read_margins_file(const std::string& path, std::vector<int>& row_sums,
                       std::vector<int>& col_sums) {
  std::istringstream in(read_text(path));
  long p = 0, q = 0;
  if (!(in >> p >> q) || p <= 0 || q <= 0) throw ParseError("margins header must be \"p q\"");
  row_sums.assign(static_cast<std::size_t>(p), 0);
  col_sums.assign(static_cast<std::size_t>(q), 0);
  for (auto& v : row_sums) {
    if (!(in >> v)) throw ParseError("missing row sum");
  }
  for (auto& v : col_sums) {
    if (!(in >> v)) throw ParseError("missing column sum");
  }
  std::string rest;
  if (in >> rest) throw ParseError("trailing data in margins file");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-margin binary matrices, checkerboard switches and spectral radius"};
  app.name("switchgraph");
  app.require_subcommand(1);
  int code = kOk;

  GenArgs gen;
  std::string gen_kind;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a matrix (er, grid, zebra)");
  gen_cmd->add_option("kind", gen_kind, "er | grid | zebra")
      ->required()
      ->check(CLI::IsMember({"er", "grid", "zebra"}));
  gen_cmd->add_option("--n", gen.n, "Vertices (er)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (er)");
  gen_cmd->add_option("--side", gen.side, "Grid side (grid)");
  gen_cmd->add_option("--rewire", gen.rewire, "Rewired edge fraction (grid)");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--margins", gen.margins, "Margins file (zebra)");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_flag("--sort", gen.sort, "Relabel vertices by non-increasing degree");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "JSON report for one matrix");
  analyze_cmd->add_option("input", analyze.input, "Matrix file")->required();
  analyze_cmd->add_option("--tol", analyze.tol, "Power iteration tolerance");
  analyze_cmd->add_option("--max-iter", analyze.max_iter, "Power iteration cap");

  ReachArgs reach;
  auto* reach_cmd = app.add_subcommand("reach", "Reachability verdict for A -> A'");
  auto* path_cmd = app.add_subcommand("path", "Switch list for A -> A', one per line");
  for (auto* cmd : {reach_cmd, path_cmd}) {
    cmd->add_option("a", reach.a, "Matrix file A")->required();
    cmd->add_option("b", reach.b, "Matrix file A'")->required();
    cmd->add_option("--max-states", reach.max_states, "Exhaustive search cap (0 disables)");
    cmd->add_flag("--no-heuristic", reach.no_heuristic, "Skip the greedy heuristic");
  }

  OptimizeArgs opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Random positive-switch trajectory");
  auto* opt_in = opt_cmd->add_option("--input", opt.input, "Adjacency matrix file");
  auto* opt_gen = opt_cmd->add_option("--gen", opt.gen, "er | grid")
                      ->check(CLI::IsMember({"er", "grid"}));
  opt_in->excludes(opt_gen);
  opt_cmd->add_option("--n", opt.n, "Vertices (er)");
  opt_cmd->add_option("--p", opt.p, "Edge probability (er)");
  opt_cmd->add_option("--side", opt.side, "Grid side (grid)");
  opt_cmd->add_option("--rewire", opt.rewire, "Rewired edge fraction (grid)");
  opt_cmd->add_option("--gen-seed", opt.gen_seed, "Generator seed");
  opt_cmd->add_option("--budget", opt.budget, "Maximum number of switches");
  opt_cmd->add_option("--lambda-every", opt.lambda_every, "lambda1 sampling period")
      ->check(CLI::PositiveNumber);
  opt_cmd->add_option("--seed", opt.seed, "Switch selection seed (trial t uses seed + t)");
  opt_cmd->add_option("--rejection-cap", opt.rejection_cap, "Rejection draws (0 = 10n)");
  opt_cmd->add_option("--trials", opt.trials, "Independent trials")->check(CLI::PositiveNumber);
  opt_cmd->add_option("--jobs", opt.jobs, "Worker threads");
  opt_cmd->add_option("--out-csv", opt.out_csv, "Trajectory CSV");
  opt_cmd->add_option("--out-initial", opt.out_initial, "Initial degree-sorted matrix");
  opt_cmd->add_option("--out-final", opt.out_final, "Final matrix");

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "Enumerate a class and verify its structure");
  auto* en_m = en_cmd->add_option("--margins", en.margins, "Margins file");
  auto* en_d = en_cmd->add_option("--degrees", en.degrees, "Comma-separated degree sequence");
  en_m->excludes(en_d);
  en_cmd->add_option("--max-states", en.max_states, "Largest class to process");
  en_cmd->add_flag("--reachability", en.reachability, "Check every ordered pair");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan-conjecture", "Search small classes for counterexamples");
  scan_cmd->add_flag("--all", scan.all, "Scan every feasible margin pair within the caps");
  scan_cmd->add_option("--trials", scan.trials, "Random margin pairs");
  scan_cmd->add_option("--seed", scan.seed, "Seed");
  scan_cmd->add_option("--max-rows", scan.max_rows)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--max-cols", scan.max_cols)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--max-entry", scan.max_entry)->check(CLI::NonNegativeNumber);
  scan_cmd->add_option("--max-states", scan.max_states, "Largest class to process");
  scan_cmd->add_option("--report", scan.report, "Findings file (JSON lines, appended)");
  scan_cmd->add_option("--artifacts", scan.artifacts, "Directory for witness matrix files");
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads");

  std::vector<std::string> argv_store{"switchgraph"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      if (gen_kind == "zebra" && gen.margins.empty()) {
        err << "gen zebra requires --margins\n";
        return kUsage;
      }
      code = cmd_gen(gen_kind, gen, out);
    } else if (analyze_cmd->parsed()) {
      code = cmd_analyze(analyze, out);
    } else if (reach_cmd->parsed()) {
      code = cmd_reach(reach, false, out);
    } else if (path_cmd->parsed()) {
      code = cmd_reach(reach, true, out);
    } else if (opt_cmd->parsed()) {
      if (opt.input.empty() && opt.gen.empty()) {
        err << "optimize requires --input or --gen\n";
        return kUsage;
      }
      code = cmd_optimize(opt, out);
    } else if (en_cmd->parsed()) {
      if (en.margins.empty() && en.degrees.empty()) {
        err << "enumerate requires --margins or --degrees\n";
        return kUsage;
      }
      code = cmd_enumerate(en, out);
    } else if (scan_cmd->parsed()) {
      code = cmd_scan(scan, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InfeasibleMargins& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const NonGraphical& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const MarginSumMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MarginMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace switchgraph::cli
