#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "switchgraph/graph.hpp"
#include "switchgraph/rng.hpp"

namespace switchgraph {

enum class Termination { sink_reached, budget_exhausted };

const char* to_string(Termination t) noexcept;

struct TrajectoryStep {
  std::size_t step = 0;  // 1-based; step s is the s-th applied switch
  SymSwitchCoord coord;
  std::int64_t M2 = 0;
  double Z2 = 0.0;
  std::optional<double> lambda1;
};

struct Trajectory {
  Graph initial = Graph::empty(1);
  Graph final_graph = Graph::empty(1);
  std::uint64_t seed = 0;
  Termination termination = Termination::sink_reached;
  std::int64_t initial_M2 = 0;
  double initial_Z2 = 0.0;
  double initial_lambda1 = 0.0;
  double final_lambda1 = 0.0;
  std::vector<TrajectoryStep> steps;
};

struct RunOptions {
  std::size_t budget = 1'000'000;
  /// lambda1 is sampled every this many steps (and always at step 0 and at termination).
  std::size_t lambda_every = 25;
  std::uint64_t seed = 1;
  /// Random quadruple draws before falling back to full enumeration; 0 means 10 * n.
  std::size_t rejection_cap = 0;
  SpectralOptions spectral;
};

/// Bit-row adjacency used by the optimiser's inner loop.
class BitAdjacency {
 public:
  explicit BitAdjacency(const Graph& g);

  std::size_t n() const noexcept { return n_; }
  bool edge(std::size_t u, std::size_t v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set(std::size_t u, std::size_t v, bool value) noexcept;

  /// Number of canonical negative symmetric checkerboards.
  std::uint64_t count_negative() const;
  /// The index-th canonical negative checkerboard in lexicographic order.
  SymSwitchCoord nth_negative(std::uint64_t index) const;

 private:
  // For the row pair (i, j): bits k > i with a_ik = 0, a_jk = 1 (candidate k) and
  // bits l with a_il = 1, a_jl = 0 (candidate l), both excluding i and j.
  void pair_masks(std::size_t i, std::size_t j, std::vector<std::uint64_t>& ks,
                  std::vector<std::uint64_t>& ls) const;
  std::uint64_t count_pairs(const std::vector<std::uint64_t>& ks,
                            const std::vector<std::uint64_t>& ls) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Uniformly random negative symmetric checkerboard: rejection sampling over random quadruples,
/// then exhaustive enumeration. nullopt exactly when `g` is a sink.
std::optional<SymSwitchCoord> sample_negative_checkerboard(const Graph& g, Rng& rng,
                                                           std::size_t rejection_cap = 0);

/// Applies successive random positive switches to a degree-sorted graph.
/// Throws std::invalid_argument when the graph is not degree-sorted.
Trajectory run(const Graph& g0, const RunOptions& options);

/// Matrix text block of the adjacency matrix.
std::string snapshot_render(const Graph& g);

/// CSV with header "step,i,j,k,l,M2,Z2,lambda1": a step-0 row without coordinates, then one
/// row per switch (1-based vertices); lambda1 is empty when not sampled.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);
std::string trajectory_csv(const Trajectory& t);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace switchgraph
