#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "switchgraph/binary_matrix.hpp"

namespace switchgraph {

/// Quadruple of pairwise distinct vertices (i, j, k, l), i < j, k < l. The symmetric switch
/// adds C_{i,j,k,l} and its transpose, so (i,j,k,l) and (k,l,i,j) name the same switch;
/// the canonical form has i < k.
struct SymSwitchCoord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  /// Validates ordering and distinctness and returns the canonical form.
  static SymSwitchCoord make(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

  SwitchCoord upper() const noexcept { return {i, j, k, l}; }

  friend auto operator<=>(const SymSwitchCoord&, const SymSwitchCoord&) = default;
};

/// Simple undirected graph over a symmetric, zero-diagonal adjacency matrix.
class Graph {
 public:
  /// Throws std::invalid_argument unless the matrix is square, symmetric, zero on the diagonal.
  explicit Graph(BinaryMatrix adjacency);

  static Graph empty(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n() const noexcept { return adj_.rows(); }
  std::size_t m() const noexcept { return m_; }
  const BinaryMatrix& adjacency() const noexcept { return adj_; }
  std::span<const int> degrees() const noexcept { return adj_.row_sums(); }
  int degree(std::size_t v) const noexcept { return adj_.row_sums()[v]; }
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return adj_(u, v); }

  /// Degrees are non-increasing in label order.
  bool degree_sorted() const noexcept;

  /// Applies a symmetric switch; throws InvalidSwitch when the checkerboard is absent.
  void switch_in_place(const SymSwitchCoord& c, Sign direction);

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  BinaryMatrix adj_;
  std::size_t m_ = 0;
};

/// Relabels so degrees are non-increasing (stable on ties). perm[new] = old.
std::pair<Graph, std::vector<std::size_t>> sort_by_degree(const Graph& g);

/// Applies a relabelling perm[new] = old.
Graph permute(const Graph& g, const std::vector<std::size_t>& perm);

std::optional<Sign> sym_checkerboard_at(const Graph& g, const SymSwitchCoord& c);

/// Canonical symmetric checkerboards of the requested sign, lexicographic order.
/// Expects a degree-sorted labelling (signs are only meaningful relative to it).
std::vector<SymSwitchCoord> find_sym_checkerboards(const Graph& g, Sign sign);

std::size_t count_sym_checkerboards(const Graph& g, Sign sign);

Graph apply_sym_switch(const Graph& g, const SymSwitchCoord& c, Sign direction);

/// (d_i - d_j)(d_k - d_l): the change of M2 under a positive switch.
std::int64_t m2_switch_delta(const Graph& g, const SymSwitchCoord& c) noexcept;

struct Zagreb {
  std::int64_t M1 = 0;
  std::int64_t M2 = 0;
  double Z1 = 0.0;
  double Z2 = 0.0;
};

std::int64_t first_zagreb(const Graph& g) noexcept;
std::int64_t second_zagreb(const Graph& g) noexcept;

/// Throws DegenerateGraph when the graph has no edges.
Zagreb zagreb(const Graph& g);

/// Degree assortativity; nullopt when the denominator vanishes (regular graphs).
/// Throws DegenerateGraph when the graph has no edges.
std::optional<double> assortativity(const Graph& g);

struct SpectralOptions {
  /// Bound on the change of successive Rayleigh quotients (relative to max(1, lambda)).
  double tol = 1e-10;
  std::size_t max_iter = 100'000;
};

struct PowerResult {
  double lambda = 0.0;
  std::vector<double> vector;  // unit L2 norm, non-negative
  std::size_t iterations = 0;
  bool converged = false;
  /// The graph is disconnected, so the Perron vector may vanish on some vertices.
  bool support_proper = false;
};

/// Power iteration on A + I from the all-ones vector; lambda is the Rayleigh quotient of A
/// at the final iterate. Never throws on non-convergence: `converged` carries the flag.
PowerResult power_iteration(const Graph& g, const SpectralOptions& options = {});

struct SpectralReport {
  double lambda1 = 0.0;
  std::vector<double> eigvec;
  std::int64_t M1 = 0;
  std::int64_t M2 = 0;
  double Z1 = 0.0;
  std::optional<double> Z2;  // undefined without edges
  std::optional<double> r;   // undefined without edges or for regular graphs
  bool converged = false;
  std::size_t iterations = 0;
  bool support_proper = false;
};

SpectralReport spectral_radius(const Graph& g, const SpectralOptions& options = {});

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// side x side grid (4-neighbour), then floor(rewire_frac * m) distinct edges are rewired:
/// one endpoint (coin flip) is kept and the other moves to a uniformly chosen vertex that is
/// not the kept endpoint and not already adjacent to it. Degrees are not preserved.
Graph gen_small_world(std::size_t side, double rewire_frac, std::uint64_t seed);

/// The split zebra with margins (R, C); throws InfeasibleMargins when none exists.
BinaryMatrix gen_split_zebra(const std::vector<int>& row_sums, const std::vector<int>& col_sums);

}  // namespace switchgraph
