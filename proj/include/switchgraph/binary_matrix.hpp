#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace switchgraph {

// Indices are 0-based in memory. Every text, JSON and CSV surface uses 1-based
// indices; conversion happens at the I/O boundary only.

/// Dense 0/1 matrix with cached row and column sums.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  /// Builds from nested rows; every entry must be 0 or 1 and rows must be equal length.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  /// Builds from strings of '0'/'1', one per row.
  static BinaryMatrix from_strings(const std::vector<std::string_view>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t r, std::size_t c) const noexcept {
    return bits_[r * cols_ + c] != 0;
  }
  bool at(std::size_t r, std::size_t c) const;

  /// Sets an entry and keeps the margin caches consistent.
  void set(std::size_t r, std::size_t c, bool value);

  std::span<const int> row_sums() const noexcept { return row_sums_; }
  std::span<const int> col_sums() const noexcept { return col_sums_; }

  /// Row-major '0'/'1' string; used as canonical vertex identity in matrix classes.
  std::string key() const;

  std::vector<std::vector<int>> to_rows() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<int> row_sums_;
  std::vector<int> col_sums_;
};

/// Coordinates (i, j, k, l) of a checkerboard: rows i < j, columns k < l.
struct SwitchCoord {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;

  /// Throws std::invalid_argument unless i < j and k < l.
  static SwitchCoord make(std::size_t i, std::size_t j, std::size_t k, std::size_t l);

  bool unitary() const noexcept { return j == i + 1 && l == k + 1; }

  friend auto operator<=>(const SwitchCoord&, const SwitchCoord&) = default;
};

enum class Sign { positive, negative };

const char* to_string(Sign s) noexcept;

struct Checkerboard {
  SwitchCoord coord;
  Sign sign = Sign::positive;

  friend bool operator==(const Checkerboard&, const Checkerboard&) = default;
};

/// The checkerboard sign at `c`, or nullopt when the 2x2 submatrix is not a checkerboard.
std::optional<Sign> checkerboard_at(const BinaryMatrix& a, const SwitchCoord& c);

/// All checkerboards of `a` (optionally restricted to one sign), in lexicographic (i,j,k,l) order.
std::vector<Checkerboard> find_checkerboards(const BinaryMatrix& a,
                                             std::optional<Sign> sign_filter = std::nullopt);

std::size_t count_checkerboards(const BinaryMatrix& a, Sign sign);

/// A positive switch turns a negative checkerboard into a positive one (adds C_{i,j,k,l});
/// a negative switch does the reverse. Throws InvalidSwitch when the submatrix does not match.
BinaryMatrix apply_switch(const BinaryMatrix& a, const SwitchCoord& c, Sign direction);
void apply_switch_in_place(BinaryMatrix& a, const SwitchCoord& c, Sign direction);

/// The unitary coordinates (p, p+1, q, q+1) whose switching matrices sum to C_{i,j,k,l}.
std::vector<SwitchCoord> unitary_decomposition(const SwitchCoord& c);

/// I(A) = sum over entries of i*j*a_ij with 1-based indices.
std::int64_t potential(const BinaryMatrix& a);

BinaryMatrix complement(const BinaryMatrix& a);
BinaryMatrix reflect_vertical(const BinaryMatrix& a);

/// b_ij = 1 - a_{p+1-i, j}: maps zebras to anti-zebras and back.
BinaryMatrix anti_transform(const BinaryMatrix& a);

/// No "01" in any row or column.
bool is_nested(const BinaryMatrix& a);
/// No "10" in any row or column.
bool is_anti_nested(const BinaryMatrix& a);

/// Zebra decomposition A = N + AN, stored as per-row lengths of the nested prefix and the
/// anti-nested suffix.
struct ZebraSplit {
  std::vector<std::size_t> nested_prefix;
  std::vector<std::size_t> anti_suffix;
};

/// Returns a decomposition when `a` is a zebra.
std::optional<ZebraSplit> zebra_decomposition(const BinaryMatrix& a);

struct MatrixClass {
  bool nested = false;
  bool anti_nested = false;
  bool zebra = false;
  bool zebra_split_h = false;
  bool zebra_split_v = false;
  bool anti_zebra = false;
  bool anti_zebra_split_h = false;
  bool anti_zebra_split_v = false;
  bool complement_of_split_zebra_or_antizebra = false;
  /// A split was only possible because one of the two parts is empty.
  bool degenerate_split = false;

  bool split_zebra() const noexcept { return zebra_split_h || zebra_split_v; }
  bool split_anti_zebra() const noexcept { return anti_zebra_split_h || anti_zebra_split_v; }
  bool none() const noexcept {
    return !(nested || anti_nested || zebra || anti_zebra ||
             complement_of_split_zebra_or_antizebra);
  }
};

MatrixClass classify(const BinaryMatrix& a);

bool is_split_zebra_h(const BinaryMatrix& a);
bool is_split_zebra_v(const BinaryMatrix& a);

/// Minimum number of entries that must flip to turn `a` into some zebra (any margins).
std::size_t zebra_distance(const BinaryMatrix& a);
/// Same for anti-zebras.
std::size_t anti_zebra_distance(const BinaryMatrix& a);

// Matrix text format: "p q\n" then p lines of q characters from {0,1}, LF endings.
BinaryMatrix parse_matrix(std::string_view text);
BinaryMatrix read_matrix(std::istream& in);
BinaryMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const BinaryMatrix& a);
void write_matrix(std::ostream& out, const BinaryMatrix& a);
void write_matrix_file(const std::string& path, const BinaryMatrix& a);

}  // namespace switchgraph
