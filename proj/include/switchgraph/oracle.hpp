#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchgraph/binary_matrix.hpp"
#include "switchgraph/graph.hpp"

namespace switchgraph {

using Margins = std::pair<std::vector<int>, std::vector<int>>;

/// Gale-Ryser test.
bool margins_feasible(const std::vector<int>& row_sums, const std::vector<int>& col_sums);

/// Every matrix with the given margins, in lexicographic order of row-major keys.
/// Throws MarginSumMismatch when the sums differ; empty exactly when infeasible.
std::vector<BinaryMatrix> enumerate_margins(const std::vector<int>& row_sums,
                                            const std::vector<int>& col_sums);

/// Feasible margin pairs with 1 <= p <= max_rows, 1 <= q <= max_cols, entries <= max_entry.
std::vector<Margins> feasible_margin_pairs(std::size_t max_rows, std::size_t max_cols,
                                           int max_entry);

struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  SwitchCoord coord;  // positive switch taking `from` to `to`
};

/// G(R,C) or G(D) on labelled matrices. Symmetric classes use symmetric switches in the
/// canonical form i < k, stored as the upper coordinate.
struct MatrixClassDAG {
  bool symmetric = false;
  std::vector<BinaryMatrix> vertices;
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;  // arc indices per vertex
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;

  std::optional<std::size_t> find(const BinaryMatrix& a) const;
};

MatrixClassDAG build_dag(std::vector<BinaryMatrix> matrices);
MatrixClassDAG build_graph_dag(const std::vector<Graph>& graphs);

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string check_name) : name(std::move(check_name)) {}  // NOLINT

  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;  // at most a handful, human readable

  void record_failure(std::string what);
  void record_pass() {
    ++checked;
    if (status == CheckStatus::skipped) status = CheckStatus::pass;
  }
};

struct StructureReport {
  std::vector<CheckResult> checks;
  bool ok() const noexcept;
  const CheckResult* get(const std::string& name) const noexcept;
};

/// Checks: acyclic, connected, potential_law, unique_sink, unique_source, singleton_nested.
StructureReport verify_structure(const MatrixClassDAG& dag);

/// Shortest positive-switch distances from one vertex; nullopt where unreachable.
std::vector<std::optional<std::size_t>> dag_distances(const MatrixClassDAG& dag, std::size_t from);

enum class SearchOutcome { found, exhausted, capped };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::vector<SwitchCoord> path;  // shortest, when found
  std::size_t explored = 0;
};

/// Breadth-first search over positive switches, pruned to states B with T(A' - B) >= 0
/// (every state on a path to A' satisfies this). Stops with `capped` once more than
/// `max_states` states have been visited.
SearchResult search_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                         std::size_t max_states);

/// Pairs sharing one difference matrix M.
struct ConjectureGroup {
  bool cond_ii = false;
  std::optional<std::pair<BinaryMatrix, BinaryMatrix>> reachable_pair;
  std::optional<std::pair<BinaryMatrix, BinaryMatrix>> unreachable_pair;
};

/// Evidence for "A -> A' for every pair with A' - A = M iff M satisfies (i) and (ii)".
/// Only groups whose M satisfies (i) are kept; the others are settled by necessity.
struct ConjectureEvidence {
  std::map<std::string, ConjectureGroup> groups;  // keyed by shape and entries of M

  std::size_t consistent = 0;
  /// (i) and (ii) hold but some pair with this M is unreachable.
  std::size_t sufficiency_counterexamples = 0;
  /// (ii) fails, yet every pair with this M is reachable.
  std::size_t necessity_counterexamples = 0;
  std::vector<std::pair<BinaryMatrix, BinaryMatrix>> witnesses;  // capped list

  /// Folds in groups from another class: the pooled reading of the quantifier.
  void merge(const ConjectureEvidence& other);
  /// Recomputes the counters and witnesses from `groups`.
  void tally(std::size_t max_witnesses = 32);
};

struct ReachabilityReport {
  std::size_t pairs = 0;
  std::size_t reachable_pairs = 0;
  CheckResult necessity{"necessity_cond_i"};
  CheckResult sufficiency{"sufficiency_i_ii_iii"};
  CheckResult verdicts{"build_path_consistent"};
  ConjectureEvidence conjecture;

  bool ok() const noexcept;
};

/// Transitive closure as ground truth for every ordered pair of a non-symmetric class.
/// With `check_verdicts`, build_path (no exhaustive fallback) is run on every pair.
ReachabilityReport verify_reachability(const MatrixClassDAG& dag, bool check_verdicts = true);

/// Erdos-Gallai test; the order of `degrees` is irrelevant.
bool is_graphical(std::vector<int> degrees);

/// Every non-increasing graphical sequence of length n.
std::vector<std::vector<int>> graphical_sequences(std::size_t n);

/// Every simple graph on labelled vertices with the given non-increasing degree sequence.
/// Throws NonGraphical, or std::invalid_argument if the sequence is not non-increasing.
std::vector<Graph> enumerate_degree_class(const std::vector<int>& degrees);

struct DenseEigen {
  double lambda1 = 0.0;
  std::vector<double> vector;  // unit norm, sign fixed so the sum is non-negative
  double gap = 0.0;            // lambda1 - lambda2
};

/// Top eigenpair from a dense symmetric eigensolver, independent of power iteration.
DenseEigen dense_top_eigen(const Graph& g);

struct SinkMaxReport {
  std::size_t graphs = 0;
  std::size_t sinks = 0;
  std::size_t maximisers = 0;
  double max_all = 0.0;
  double max_sinks = 0.0;
  CheckResult max_at_sink{"max_at_sink"};
  /// d_i > d_j implies x_i >= x_j at each maximiser; skipped when lambda1 is not simple.
  CheckResult eigvec_order{"eigenvector_order"};

  bool ok() const noexcept { return max_at_sink.status != CheckStatus::fail; }
};

SinkMaxReport verify_sink_max(const std::vector<Graph>& graphs, double tol = 1e-9);

}  // namespace switchgraph
