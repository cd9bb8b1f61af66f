#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "switchgraph/binary_matrix.hpp"

namespace switchgraph {

/// Dense row-major integer grid.
template <class T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
    }
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntGrid = Grid<std::int64_t>;

/// M = A' - A: entries in {-1, 0, 1}, every row and column summing to zero.
class DiffMatrix {
 public:
  /// Validates the entry range and zero margins.
  static DiffMatrix from_grid(IntGrid entries);

  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  std::int64_t operator()(std::size_t r, std::size_t c) const noexcept { return entries_(r, c); }
  const IntGrid& grid() const noexcept { return entries_; }
  bool is_zero() const noexcept;

 private:
  explicit DiffMatrix(IntGrid g) : entries_(std::move(g)) {}
  IntGrid entries_;
};

/// Throws DimensionMismatch or MarginMismatch.
DiffMatrix diff(const BinaryMatrix& a, const BinaryMatrix& a_prime);

/// Coefficients t of M = sum t_ik C_{i,i+1,k,k+1} on the (p-1) x (q-1) cell grid.
struct TGrid {
  IntGrid coeffs;
  /// Condition (i): every coefficient is non-negative.
  bool nonnegative = true;

  std::int64_t max() const;
  std::int64_t total() const;
  bool is_zero() const;
};

/// 2-D prefix sums t_ik = sum_{a<=i, b<=k} m_ab. Accepts any zero-margin integer matrix.
TGrid compute_T(const IntGrid& m);
TGrid compute_T(const DiffMatrix& m);

/// Four-term relation m_ij = t_ij + t_{i-1,j-1} - t_{i,j-1} - t_{i-1,j} on a zero-padded border.
IntGrid reconstruct_from_T(const IntGrid& t);

struct Cell {
  std::size_t r = 0;
  std::size_t c = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Cell set {t >= level}, split into 4-connected components with their hole counts.
struct PolyominoLevel {
  std::int64_t level = 0;
  std::vector<Cell> cells;
  std::vector<std::vector<Cell>> components;
  std::vector<std::size_t> holes;
};

/// 4-connected components of a cell set, each sorted, ordered by their first cell.
std::vector<std::vector<Cell>> connected_components(const std::vector<Cell>& cells);

/// Number of bounded 4-connected regions of the complement of `component`.
std::size_t count_holes(const std::vector<Cell>& component);

/// Levels 1..max t. Coefficients below 1 never appear in any level.
std::vector<PolyominoLevel> polyomino_levels(const IntGrid& t);
std::vector<PolyominoLevel> polyomino_levels(const TGrid& t);

struct ConditionReport {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  TGrid t;
};

/// Condition (i): T >= 0. (ii): every component of every level is simply connected.
/// (iii): cells at Chebyshev distance 1 inside the grid differ by at most 1.
ConditionReport check_conditions(const DiffMatrix& m);
bool condition_ii(const IntGrid& t);
bool condition_iii(const IntGrid& t);

/// Half-open rectangle of grid cells, rows [row_begin, row_end) x cols [col_begin, col_end).
struct Rect {
  std::size_t row_begin = 0;
  std::size_t row_end = 0;
  std::size_t col_begin = 0;
  std::size_t col_end = 0;

  std::size_t area() const noexcept { return (row_end - row_begin) * (col_end - col_begin); }
  /// The switch whose unitary decomposition is exactly these cells.
  SwitchCoord as_switch() const noexcept { return {row_begin, row_end, col_begin, col_end}; }

  friend auto operator<=>(const Rect&, const Rect&) = default;
};

/// Cells covered by a switch rectangle.
Rect rect_of(const SwitchCoord& c) noexcept;

struct Motif {
  Rect rect;
  int kind = 0;  // 1, 2 or 3
  friend auto operator<=>(const Motif&, const Motif&) = default;
};

/// Every motif rectangle on the contour of a component, deduplicated and sorted by rectangle.
/// Motif 1 is the whole component when it is a rectangle; motifs 2 and 3 sit on a contour
/// edge between two convex corners (all rotations, and reflections for motif 3).
std::vector<Motif> find_motifs(const std::vector<Cell>& component);

/// First motif of one component of a level. Throws MotifNotFound when there is none.
Motif find_motif(const PolyominoLevel& level, std::size_t component);

enum class ReachStatus {
  identical,
  unreachable_condition_i,
  reachable_constructive,
  reachable_heuristic,
  reachable_exhaustive,
  unreachable_exhaustive,
  unknown,
};

const char* to_string(ReachStatus s) noexcept;
bool is_reachable(ReachStatus s) noexcept;
bool is_unreachable(ReachStatus s) noexcept;

struct ReachVerdict {
  ReachStatus status = ReachStatus::unknown;
  /// Positive switches leading from A to A' (present for identical and reachable verdicts).
  std::optional<std::vector<SwitchCoord>> path;
  ConditionReport conditions;
  /// States visited by the exhaustive search, when it ran.
  std::optional<std::size_t> explored_states;
};

struct ReachOptions {
  /// Exhaustive search runs only while the visited state count stays within this cap;
  /// zero disables it.
  std::size_t max_states = 1'000'000;
  bool use_heuristic = true;
};

/// Positive switches along the constructive proof: requires conditions (i)-(iii).
/// Throws InternalInvariantViolation if no valid motif switch exists at some step.
std::vector<SwitchCoord> constructive_path(const BinaryMatrix& a, const BinaryMatrix& a_prime);

/// Repeatedly applies the lexicographically first negative checkerboard whose rectangle keeps
/// T non-negative. Returns the path on success.
std::optional<std::vector<SwitchCoord>> greedy_path(const BinaryMatrix& a,
                                                    const BinaryMatrix& a_prime);

/// True when every step is a positive switch on the running matrix and the walk ends at a_prime.
bool validate_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                   const std::vector<SwitchCoord>& path);

ReachVerdict build_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                        const ReachOptions& options = {});

}  // namespace switchgraph
