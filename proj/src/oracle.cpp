#include "switchgraph/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "switchgraph/error.hpp"
#include "switchgraph/reach.hpp"

namespace switchgraph {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;
constexpr std::size_t kMaxWitnesses = 32;

std::int64_t total(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::string coord_text(const SwitchCoord& c) {
  return "(" + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + "," +
         std::to_string(c.k + 1) + "," + std::to_string(c.l + 1) + ")";
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[root(a)] = root(b); }
};

// Vertices in topological order, or nullopt when a cycle exists.
std::optional<std::vector<std::size_t>> topological_order(const MatrixClassDAG& dag) {
  const std::size_t n = dag.vertices.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& arc : dag.arcs) ++indeg[arc.to];
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t e : dag.out[order[head]]) {
      if (--indeg[dag.arcs[e].to] == 0) order.push_back(dag.arcs[e].to);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

void finish_dag(MatrixClassDAG& dag,
                const std::unordered_map<std::string, std::size_t>& index,
                const std::function<std::vector<std::pair<SwitchCoord, BinaryMatrix>>(
                    const BinaryMatrix&)>& successors) {
  const std::size_t n = dag.vertices.size();
  dag.out.assign(n, {});
  std::vector<bool> has_in(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto& [coord, next] : successors(dag.vertices[v])) {
      const auto it = index.find(next.key());
      if (it == index.end()) throw InternalInvariantViolation("switch leaves the matrix class");
      dag.out[v].push_back(dag.arcs.size());
      dag.arcs.push_back({v, it->second, coord});
      has_in[it->second] = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!has_in[v]) dag.sources.push_back(v);
    if (dag.out[v].empty()) dag.sinks.push_back(v);
  }
}

std::unordered_map<std::string, std::size_t> index_vertices(const MatrixClassDAG& dag) {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(dag.vertices.size() * 2);
  for (std::size_t v = 0; v < dag.vertices.size(); ++v) {
    if (!index.emplace(dag.vertices[v].key(), v).second) {
      throw std::invalid_argument("duplicate matrix in class");
    }
  }
  return index;
}

bool nested_after_reordering(const BinaryMatrix& a) {
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  const auto rs = a.row_sums();
  const auto cs = a.col_sums();
  std::stable_sort(rows.begin(), rows.end(), [&](auto x, auto y) { return rs[x] > rs[y]; });
  std::stable_sort(cols.begin(), cols.end(), [&](auto x, auto y) { return cs[x] > cs[y]; });
  BinaryMatrix b(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) b.set(r, c, a(rows[r], cols[c]));
  }
  return is_nested(b);
}

std::string group_key(const DiffMatrix& m) {
  std::string key = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::int64_t v : m.grid().data()) key.push_back(v < 0 ? '-' : (v > 0 ? '+' : '0'));
  return key;
}

std::string pair_text(const BinaryMatrix& a, const BinaryMatrix& b) {
  return "A=" + a.key() + " A'=" + b.key();
}

}  // namespace

bool margins_feasible(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
  const auto p = static_cast<int>(row_sums.size());
  const auto q = static_cast<int>(col_sums.size());
  if (total(row_sums) != total(col_sums)) return false;
  for (int r : row_sums) {
    if (r < 0 || r > q) return false;
  }
  for (int c : col_sums) {
    if (c < 0 || c > p) return false;
  }
  std::vector<int> r = row_sums;
  std::sort(r.begin(), r.end(), std::greater<>());
  std::int64_t lhs = 0;
  for (int k = 1; k <= p; ++k) {
    lhs += r[k - 1];
    std::int64_t rhs = 0;
    for (int c : col_sums) rhs += std::min(c, k);
    if (lhs > rhs) return false;
  }
  return true;
}

std::vector<BinaryMatrix> enumerate_margins(const std::vector<int>& row_sums,
                                            const std::vector<int>& col_sums) {
  if (row_sums.empty() || col_sums.empty()) throw std::invalid_argument("empty margins");
  if (total(row_sums) != total(col_sums)) {
    throw MarginSumMismatch("row and column sums differ");
  }
  std::vector<BinaryMatrix> out;
  if (!margins_feasible(row_sums, col_sums)) return out;

  const std::size_t p = row_sums.size();
  const std::size_t q = col_sums.size();
  std::vector<int> row_left = row_sums;
  std::vector<int> col_left = col_sums;
  BinaryMatrix cur(p, q);

  // Cell-wise depth-first search; 0 before 1 gives lexicographic key order.
  std::function<void(std::size_t)> place = [&](std::size_t cell) {
    if (cell == p * q) {
      out.push_back(cur);
      return;
    }
    const std::size_t r = cell / q;
    const std::size_t c = cell % q;
    const auto cells_after_in_row = static_cast<int>(q - c - 1);
    const auto rows_after = static_cast<int>(p - r - 1);
    if (row_left[r] <= cells_after_in_row && col_left[c] <= rows_after) place(cell + 1);
    if (row_left[r] > 0 && col_left[c] > 0) {
      --row_left[r];
      --col_left[c];
      cur.set(r, c, true);
      place(cell + 1);
      cur.set(r, c, false);
      ++row_left[r];
      ++col_left[c];
    }
  };
  place(0);
  return out;
}

std::vector<Margins> feasible_margin_pairs(std::size_t max_rows, std::size_t max_cols,
                                           int max_entry) {
  std::vector<Margins> out;
  auto vectors = [](std::size_t len, int hi) {
    std::vector<std::vector<int>> all{{}};
    for (std::size_t pos = 0; pos < len; ++pos) {
      std::vector<std::vector<int>> next;
      for (const auto& v : all) {
        for (int x = 0; x <= hi; ++x) {
          next.push_back(v);
          next.back().push_back(x);
        }
      }
      all = std::move(next);
    }
    return all;
  };
  for (std::size_t p = 1; p <= max_rows; ++p) {
    for (std::size_t q = 1; q <= max_cols; ++q) {
      const auto rows = vectors(p, std::min<int>(max_entry, static_cast<int>(q)));
      const auto cols = vectors(q, std::min<int>(max_entry, static_cast<int>(p)));
      for (const auto& r : rows) {
        for (const auto& c : cols) {
          if (margins_feasible(r, c)) out.emplace_back(r, c);
        }
      }
    }
  }
  return out;
}

std::optional<std::size_t> MatrixClassDAG::find(const BinaryMatrix& a) const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v] == a) return v;
  }
  return std::nullopt;
}

MatrixClassDAG build_dag(std::vector<BinaryMatrix> matrices) {
  MatrixClassDAG dag;
  dag.vertices = std::move(matrices);
  for (const auto& m : dag.vertices) {
    const auto& first = dag.vertices.front();
    if (m.rows() != first.rows() || m.cols() != first.cols()) {
      throw DimensionMismatch("matrices of different shapes");
    }
    if (!std::equal(m.row_sums().begin(), m.row_sums().end(), first.row_sums().begin()) ||
        !std::equal(m.col_sums().begin(), m.col_sums().end(), first.col_sums().begin())) {
      throw MarginMismatch("matrices with different margins");
    }
  }
  const auto index = index_vertices(dag);
  finish_dag(dag, index, [](const BinaryMatrix& a) {
    std::vector<std::pair<SwitchCoord, BinaryMatrix>> next;
    for (const auto& cb : find_checkerboards(a, Sign::negative)) {
      next.emplace_back(cb.coord, apply_switch(a, cb.coord, Sign::positive));
    }
    return next;
  });
  return dag;
}

MatrixClassDAG build_graph_dag(const std::vector<Graph>& graphs) {
  MatrixClassDAG dag;
  dag.symmetric = true;
  for (const auto& g : graphs) {
    if (!g.degree_sorted()) throw std::invalid_argument("graph classes need degree-sorted labels");
    dag.vertices.push_back(g.adjacency());
  }
  const auto index = index_vertices(dag);
  finish_dag(dag, index, [](const BinaryMatrix& a) {
    const Graph g(a);
    std::vector<std::pair<SwitchCoord, BinaryMatrix>> next;
    for (const auto& c : find_sym_checkerboards(g, Sign::negative)) {
      next.emplace_back(c.upper(), apply_sym_switch(g, c, Sign::positive).adjacency());
    }
    return next;
  });
  return dag;
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "skipped";
}

void CheckResult::record_failure(std::string what) {
  ++checked;
  status = CheckStatus::fail;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

bool StructureReport::ok() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* StructureReport::get(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

StructureReport verify_structure(const MatrixClassDAG& dag) {
  StructureReport report;
  const std::size_t n = dag.vertices.size();

  CheckResult acyclic{"acyclic"};
  if (topological_order(dag)) {
    acyclic.record_pass();
  } else {
    acyclic.record_failure("cycle present");
  }

  CheckResult connected{"connected"};
  DisjointSets sets(n);
  for (const auto& arc : dag.arcs) sets.join(arc.from, arc.to);
  std::size_t components = 0;
  for (std::size_t v = 0; v < n; ++v) components += sets.root(v) == v ? 1 : 0;
  if (components <= 1) {
    connected.record_pass();
  } else {
    connected.record_failure(std::to_string(components) + " components");
  }

  CheckResult law{"potential_law"};
  const std::int64_t factor = dag.symmetric ? 2 : 1;
  for (const auto& arc : dag.arcs) {
    const auto& c = arc.coord;
    const std::int64_t expected = factor * static_cast<std::int64_t>(c.j - c.i) *
                                  static_cast<std::int64_t>(c.l - c.k);
    const std::int64_t got = potential(dag.vertices[arc.to]) - potential(dag.vertices[arc.from]);
    if (got == expected && got > 0) {
      law.record_pass();
    } else {
      law.record_failure(dag.vertices[arc.from].key() + " " + coord_text(c) + ": dI=" +
                         std::to_string(got) + " expected " + std::to_string(expected));
    }
  }

  CheckResult sink{"unique_sink"};
  CheckResult source{"unique_source"};
  CheckResult singleton{"singleton_nested"};
  if (!dag.symmetric) {
    for (std::size_t v = 0; v < n; ++v) {
      const MatrixClass cls = classify(dag.vertices[v]);
      if (cls.split_zebra() || cls.split_anti_zebra()) {
        if (dag.sinks.size() == 1 && dag.sinks.front() == v) {
          sink.record_pass();
        } else {
          sink.record_failure(dag.vertices[v].key() + " is split but " +
                              std::to_string(dag.sinks.size()) + " sinks");
        }
      }
      if (cls.complement_of_split_zebra_or_antizebra) {
        if (dag.sources.size() == 1 && dag.sources.front() == v) {
          source.record_pass();
        } else {
          source.record_failure(dag.vertices[v].key() + " is a split complement but " +
                                std::to_string(dag.sources.size()) + " sources");
        }
      }
    }
    if (n == 1) {
      if (nested_after_reordering(dag.vertices.front())) {
        singleton.record_pass();
      } else {
        singleton.record_failure(dag.vertices.front().key());
      }
    }
  }

  report.checks = {acyclic, connected, law, sink, source, singleton};
  return report;
}

std::vector<std::optional<std::size_t>> dag_distances(const MatrixClassDAG& dag,
                                                      std::size_t from) {
  std::vector<std::optional<std::size_t>> dist(dag.vertices.size());
  dist.at(from) = 0;
  std::deque<std::size_t> queue{from};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : dag.out[v]) {
      const std::size_t w = dag.arcs[e].to;
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

SearchResult search_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                         std::size_t max_states) {
  SearchResult res;
  const DiffMatrix root = diff(a, a_prime);
  res.explored = 1;
  if (root.is_zero()) {
    res.outcome = SearchOutcome::found;
    return res;
  }
  if (!compute_T(root).nonnegative) {
    res.outcome = SearchOutcome::exhausted;
    return res;
  }

  struct Node {
    BinaryMatrix m;
    std::size_t parent;
    SwitchCoord via;
  };
  std::vector<Node> nodes;
  nodes.push_back({a, 0, {}});
  std::unordered_map<std::string, std::size_t> seen{{a.key(), 0}};

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const BinaryMatrix x = nodes[head].m;
    const IntGrid t = compute_T(diff(x, a_prime)).coeffs;
    for (const auto& cb : find_checkerboards(x, Sign::negative)) {
      const auto& c = cb.coord;
      bool keeps = true;
      for (std::size_t r = c.i; r < c.j && keeps; ++r) {
        for (std::size_t col = c.k; col < c.l; ++col) {
          if (t(r, col) < 1) {
            keeps = false;
            break;
          }
        }
      }
      if (!keeps) continue;
      BinaryMatrix y = apply_switch(x, c, Sign::positive);
      auto key = y.key();
      if (seen.count(key) != 0) continue;
      if (max_states != 0 && nodes.size() >= max_states) {
        res.outcome = SearchOutcome::capped;
        res.explored = nodes.size();
        return res;
      }
      const bool done = y == a_prime;
      seen.emplace(std::move(key), nodes.size());
      nodes.push_back({std::move(y), head, c});
      if (done) {
        for (std::size_t v = nodes.size() - 1; v != 0; v = nodes[v].parent) {
          res.path.push_back(nodes[v].via);
        }
        std::reverse(res.path.begin(), res.path.end());
        res.outcome = SearchOutcome::found;
        res.explored = nodes.size();
        return res;
      }
    }
  }
  res.outcome = SearchOutcome::exhausted;
  res.explored = nodes.size();
  return res;
}

void ConjectureEvidence::merge(const ConjectureEvidence& other) {
  for (const auto& [key, g] : other.groups) {
    ConjectureGroup& mine = groups[key];
    mine.cond_ii = g.cond_ii;
    if (!mine.reachable_pair) mine.reachable_pair = g.reachable_pair;
    if (!mine.unreachable_pair) mine.unreachable_pair = g.unreachable_pair;
  }
}

void ConjectureEvidence::tally(std::size_t max_witnesses) {
  consistent = sufficiency_counterexamples = necessity_counterexamples = 0;
  witnesses.clear();
  for (const auto& [key, g] : groups) {
    const std::optional<std::pair<BinaryMatrix, BinaryMatrix>>* witness = nullptr;
    if (g.cond_ii && g.unreachable_pair) {
      ++sufficiency_counterexamples;
      witness = &g.unreachable_pair;
    } else if (!g.cond_ii && !g.unreachable_pair) {
      ++necessity_counterexamples;
      witness = &g.reachable_pair;
    } else {
      ++consistent;
    }
    if (witness && *witness && witnesses.size() < max_witnesses) witnesses.push_back(**witness);
  }
}

bool ReachabilityReport::ok() const noexcept {
  return necessity.status != CheckStatus::fail && sufficiency.status != CheckStatus::fail &&
         verdicts.status != CheckStatus::fail;
}

ReachabilityReport verify_reachability(const MatrixClassDAG& dag, bool check_verdicts) {
  if (dag.symmetric) throw std::invalid_argument("reachability oracle needs a G(R,C) class");
  ReachabilityReport report;
  const std::size_t n = dag.vertices.size();
  const auto order = topological_order(dag);
  if (!order) throw InternalInvariantViolation("matrix class contains a cycle");

  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> closure(n * words, 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const std::size_t v = *it;
    std::uint64_t* row = &closure[v * words];
    row[v / 64] |= std::uint64_t{1} << (v % 64);
    for (std::size_t e : dag.out[v]) {
      const std::uint64_t* other = &closure[dag.arcs[e].to * words];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
  auto reaches = [&](std::size_t u, std::size_t v) {
    return ((closure[u * words + v / 64] >> (v % 64)) & 1U) != 0;
  };

  const ReachOptions no_search{0, true};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const auto& a = dag.vertices[u];
      const auto& b = dag.vertices[v];
      ++report.pairs;
      const bool truth = reaches(u, v);
      if (truth) ++report.reachable_pairs;
      const DiffMatrix m = diff(a, b);
      const ConditionReport cond = check_conditions(m);

      if (truth) {
        if (cond.cond_i) {
          report.necessity.record_pass();
        } else {
          report.necessity.record_failure(pair_text(a, b));
        }
      }
      if (cond.cond_i && cond.cond_ii && cond.cond_iii) {
        if (truth) {
          report.sufficiency.record_pass();
        } else {
          report.sufficiency.record_failure(pair_text(a, b));
        }
      }

      if (check_verdicts) {
        try {
          const ReachVerdict verdict = build_path(a, b, no_search);
          bool consistent = true;
          if (is_reachable(verdict.status)) {
            consistent = truth && verdict.path && validate_path(a, b, *verdict.path);
          } else if (is_unreachable(verdict.status)) {
            consistent = !truth;
          }
          if (consistent) {
            report.verdicts.record_pass();
          } else {
            report.verdicts.record_failure(pair_text(a, b) + " " + to_string(verdict.status));
          }
        } catch (const Error& e) {
          report.verdicts.record_failure(pair_text(a, b) + " threw: " + e.what());
        }
      }

      if (!cond.cond_i) continue;
      ConjectureGroup& g = report.conjecture.groups[group_key(m)];
      g.cond_ii = cond.cond_ii;
      auto& slot = truth ? g.reachable_pair : g.unreachable_pair;
      if (!slot) slot.emplace(a, b);
    }
  }
  report.conjecture.tally(kMaxWitnesses);
  return report;
}

bool is_graphical(std::vector<int> degrees) {
  const auto n = static_cast<std::int64_t>(degrees.size());
  std::int64_t sum = 0;
  for (int d : degrees) {
    if (d < 0 || d >= n) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += degrees[k - 1];
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) rhs += std::min<std::int64_t>(degrees[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

std::vector<std::vector<int>> graphical_sequences(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int cap) {
    if (cur.size() == n) {
      if (is_graphical(cur)) out.push_back(cur);
      return;
    }
    for (int d = cap; d >= 0; --d) {
      cur.push_back(d);
      extend(d);
      cur.pop_back();
    }
  };
  if (n > 0) extend(static_cast<int>(n) - 1);
  return out;
}

std::vector<Graph> enumerate_degree_class(const std::vector<int>& degrees) {
  if (!std::is_sorted(degrees.begin(), degrees.end(), std::greater<>())) {
    throw std::invalid_argument("degree sequence must be non-increasing");
  }
  if (degrees.empty() || !is_graphical(degrees)) throw NonGraphical("degree sequence is not graphical");
  const std::size_t n = degrees.size();
  std::vector<int> left = degrees;
  BinaryMatrix adj(n, n);
  std::vector<Graph> out;

  // Vertex v picks its remaining neighbours among later vertices.
  std::function<void(std::size_t)> at_vertex;
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t v, std::size_t from) {
    if (left[v] == 0) {
      at_vertex(v + 1);
      return;
    }
    std::size_t room = 0;
    for (std::size_t u = from; u < n; ++u) room += left[u] > 0 ? 1 : 0;
    if (room < static_cast<std::size_t>(left[v])) return;
    for (std::size_t u = from; u < n; ++u) {
      if (left[u] == 0) continue;
      --left[u];
      --left[v];
      adj.set(v, u, true);
      adj.set(u, v, true);
      choose(v, u + 1);
      adj.set(v, u, false);
      adj.set(u, v, false);
      ++left[u];
      ++left[v];
    }
  };
  at_vertex = [&](std::size_t v) {
    if (v == n) {
      out.emplace_back(adj);
      return;
    }
    choose(v, v + 1);
  };
  at_vertex(0);
  return out;
}

DenseEigen dense_top_eigen(const Graph& g) {
  const std::size_t n = g.n();
  Eigen::MatrixXd a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = g.has_edge(r, c) ? 1.0 : 0.0;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw InternalInvariantViolation("eigensolver failed");
  const auto& values = solver.eigenvalues();
  DenseEigen out;
  out.lambda1 = values(static_cast<Eigen::Index>(n) - 1);
  out.gap = n > 1 ? out.lambda1 - values(static_cast<Eigen::Index>(n) - 2)
                  : std::numeric_limits<double>::infinity();
  Eigen::VectorXd x = solver.eigenvectors().col(static_cast<Eigen::Index>(n) - 1);
  if (x.sum() < 0) x = -x;
  out.vector.assign(x.data(), x.data() + x.size());
  return out;
}

SinkMaxReport verify_sink_max(const std::vector<Graph>& graphs, double tol) {
  SinkMaxReport report;
  report.graphs = graphs.size();
  if (graphs.empty()) return report;

  std::vector<DenseEigen> eig;
  eig.reserve(graphs.size());
  report.max_all = -std::numeric_limits<double>::infinity();
  report.max_sinks = -std::numeric_limits<double>::infinity();
  for (const auto& g : graphs) {
    eig.push_back(dense_top_eigen(g));
    report.max_all = std::max(report.max_all, eig.back().lambda1);
    if (count_sym_checkerboards(g, Sign::negative) == 0) {
      ++report.sinks;
      report.max_sinks = std::max(report.max_sinks, eig.back().lambda1);
    }
  }
  if (report.sinks > 0 && std::abs(report.max_all - report.max_sinks) <= tol) {
    report.max_at_sink.record_pass();
  } else {
    report.max_at_sink.record_failure(
        "max " + std::to_string(report.max_all) + " vs sinks " + std::to_string(report.max_sinks));
  }

  for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
    if (eig[idx].lambda1 < report.max_all - tol) continue;
    ++report.maximisers;
    if (eig[idx].gap < tol) continue;
    const auto d = graphs[idx].degrees();
    const auto& x = eig[idx].vector;
    bool ordered = true;
    for (std::size_t i = 0; i < d.size() && ordered; ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[i] > d[j] && x[i] < x[j] - tol) {
          ordered = false;
          break;
        }
      }
    }
    if (ordered) {
      report.eigvec_order.record_pass();
    } else {
      report.eigvec_order.record_failure(graphs[idx].adjacency().key());
    }
  }
  return report;
}

}  // namespace switchgraph
