#include "switchgraph/binary_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "switchgraph/error.hpp"

namespace switchgraph {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0), row_sums_(rows, 0), col_sums_(cols, 0) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
  }
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
  }
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) throw std::invalid_argument("entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string_view>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DimensionMismatch("matrix dimensions must be at least 1x1");
  }
  BinaryMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      const char ch = rows[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("entries must be '0' or '1'");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

bool BinaryMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(r, c);
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& cell = bits_.at(r * cols_ + c);
  const int delta = static_cast<int>(value) - static_cast<int>(cell);
  cell = value ? 1 : 0;
  row_sums_[r] += delta;
  col_sums_[c] += delta;
}

std::string BinaryMatrix::key() const {
  std::string s(bits_.size(), '0');
  for (std::size_t idx = 0; idx < bits_.size(); ++idx) {
    if (bits_[idx]) s[idx] = '1';
  }
  return s;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c) ? 1 : 0;
  }
  return out;
}

SwitchCoord SwitchCoord::make(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (!(i < j && k < l)) throw std::invalid_argument("switch coordinates need i < j and k < l");
  return SwitchCoord{i, j, k, l};
}

const char* to_string(Sign s) noexcept {
  return s == Sign::positive ? "positive" : "negative";
}

std::optional<Sign> checkerboard_at(const BinaryMatrix& a, const SwitchCoord& c) {
  const bool ik = a(c.i, c.k);
  const bool il = a(c.i, c.l);
  const bool jk = a(c.j, c.k);
  const bool jl = a(c.j, c.l);
  if (ik && jl && !il && !jk) return Sign::positive;
  if (!ik && !jl && il && jk) return Sign::negative;
  return std::nullopt;
}

std::vector<Checkerboard> find_checkerboards(const BinaryMatrix& a,
                                             std::optional<Sign> sign_filter) {
  std::vector<Checkerboard> out;
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      for (std::size_t k = 0; k < q; ++k) {
        // Row i and j must differ in column k for any checkerboard containing it.
        if (a(i, k) == a(j, k)) continue;
        for (std::size_t l = k + 1; l < q; ++l) {
          const SwitchCoord c{i, j, k, l};
          const auto s = checkerboard_at(a, c);
          if (s && (!sign_filter || *s == *sign_filter)) out.push_back({c, *s});
        }
      }
    }
  }
  return out;
}

std::size_t count_checkerboards(const BinaryMatrix& a, Sign sign) {
  std::size_t n = 0;
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      for (std::size_t k = 0; k < q; ++k) {
        if (a(i, k) == a(j, k)) continue;
        for (std::size_t l = k + 1; l < q; ++l) {
          const auto s = checkerboard_at(a, {i, j, k, l});
          if (s && *s == sign) ++n;
        }
      }
    }
  }
  return n;
}

namespace {

void check_coord_bounds(const BinaryMatrix& a, const SwitchCoord& c) {
  if (!(c.i < c.j && c.k < c.l)) throw InvalidSwitch("switch coordinates need i < j and k < l");
  if (c.j >= a.rows() || c.l >= a.cols()) throw InvalidSwitch("switch coordinates out of range");
}

}  // namespace

void apply_switch_in_place(BinaryMatrix& a, const SwitchCoord& c, Sign direction) {
  check_coord_bounds(a, c);
  const auto s = checkerboard_at(a, c);
  const Sign required = direction == Sign::positive ? Sign::negative : Sign::positive;
  if (!s || *s != required) {
    throw InvalidSwitch(std::string(to_string(direction)) + " switch requires a " +
                        to_string(required) + " checkerboard");
  }
  const bool to_positive = direction == Sign::positive;
  a.set(c.i, c.k, to_positive);
  a.set(c.j, c.l, to_positive);
  a.set(c.i, c.l, !to_positive);
  a.set(c.j, c.k, !to_positive);
}

BinaryMatrix apply_switch(const BinaryMatrix& a, const SwitchCoord& c, Sign direction) {
  BinaryMatrix out = a;
  apply_switch_in_place(out, c, direction);
  return out;
}

std::vector<SwitchCoord> unitary_decomposition(const SwitchCoord& c) {
  std::vector<SwitchCoord> out;
  out.reserve((c.j - c.i) * (c.l - c.k));
  for (std::size_t r = c.i; r < c.j; ++r) {
    for (std::size_t s = c.k; s < c.l; ++s) out.push_back({r, r + 1, s, s + 1});
  }
  return out;
}

std::int64_t potential(const BinaryMatrix& a) {
  std::int64_t total = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c)) total += static_cast<std::int64_t>(r + 1) * static_cast<std::int64_t>(c + 1);
    }
  }
  return total;
}

BinaryMatrix complement(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, !a(r, c));
  }
  return out;
}

BinaryMatrix reflect_vertical(const BinaryMatrix& a) {
  BinaryMatrix out(a.rows(), a.cols());
  const std::size_t p = a.rows();
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(p - 1 - r, c, a(r, c));
  }
  return out;
}

BinaryMatrix anti_transform(const BinaryMatrix& a) { return complement(reflect_vertical(a)); }

namespace {

// Checks for a forbidden adjacent pair (`first`, !`first`) in every row and column of the
// block [r0, r1) x [c0, c1). Nested forbids "01", anti-nested forbids "10".
bool block_free_of(const BinaryMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                   std::size_t c1, bool first) {
  for (std::size_t r = r0; r < r1; ++r) {
    for (std::size_t c = c0; c + 1 < c1; ++c) {
      if (a(r, c) == first && a(r, c + 1) != first) return false;
    }
  }
  for (std::size_t c = c0; c < c1; ++c) {
    for (std::size_t r = r0; r + 1 < r1; ++r) {
      if (a(r, c) == first && a(r + 1, c) != first) return false;
    }
  }
  return true;
}

bool block_nested(const BinaryMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                  std::size_t c1) {
  return block_free_of(a, r0, r1, c0, c1, false);
}

bool block_anti_nested(const BinaryMatrix& a, std::size_t r0, std::size_t r1, std::size_t c0,
                       std::size_t c1) {
  return block_free_of(a, r0, r1, c0, c1, true);
}

}  // namespace

bool is_nested(const BinaryMatrix& a) { return block_nested(a, 0, a.rows(), 0, a.cols()); }

bool is_anti_nested(const BinaryMatrix& a) {
  return block_anti_nested(a, 0, a.rows(), 0, a.cols());
}

std::optional<ZebraSplit> zebra_decomposition(const BinaryMatrix& a) {
  // Each row of a zebra reads 1^n 0^* 1^s with n non-increasing and s non-decreasing down
  // the rows. Rows that are not full force (n, s); full rows take the largest nested prefix
  // the staircase allows, which leaves the most room for the rows below.
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  ZebraSplit split;
  split.nested_prefix.resize(p);
  split.anti_suffix.resize(p);
  std::size_t prev_n = q;
  std::size_t prev_s = 0;
  for (std::size_t r = 0; r < p; ++r) {
    std::size_t lead = 0;
    while (lead < q && a(r, lead)) ++lead;
    std::size_t n = 0;
    std::size_t s = 0;
    if (lead == q) {
      n = std::min(prev_n, q - prev_s);
      s = q - n;
    } else {
      std::size_t trail = 0;
      while (trail < q && a(r, q - 1 - trail)) ++trail;
      if (static_cast<std::size_t>(a.row_sums()[r]) != lead + trail) return std::nullopt;
      n = lead;
      s = trail;
    }
    if (n > prev_n || s < prev_s) return std::nullopt;
    split.nested_prefix[r] = n;
    split.anti_suffix[r] = s;
    prev_n = n;
    prev_s = s;
  }
  return split;
}

bool is_split_zebra_h(const BinaryMatrix& a) {
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  for (std::size_t h = 0; h <= p; ++h) {
    if (block_nested(a, 0, h, 0, q) && block_anti_nested(a, h, p, 0, q)) return true;
  }
  return false;
}

bool is_split_zebra_v(const BinaryMatrix& a) {
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  for (std::size_t v = 0; v <= q; ++v) {
    if (block_nested(a, 0, p, 0, v) && block_anti_nested(a, 0, p, v, q)) return true;
  }
  return false;
}

namespace {

bool split_zebra_or_anti(const BinaryMatrix& a) {
  if (is_split_zebra_h(a) || is_split_zebra_v(a)) return true;
  const BinaryMatrix t = anti_transform(a);
  return is_split_zebra_h(t) || is_split_zebra_v(t);
}

}  // namespace

MatrixClass classify(const BinaryMatrix& a) {
  MatrixClass cls;
  cls.nested = is_nested(a);
  cls.anti_nested = is_anti_nested(a);
  cls.zebra = zebra_decomposition(a).has_value();
  if (cls.zebra) {
    cls.zebra_split_h = is_split_zebra_h(a);
    cls.zebra_split_v = is_split_zebra_v(a);
  }

  const BinaryMatrix t = anti_transform(a);
  cls.anti_zebra = zebra_decomposition(t).has_value();
  if (cls.anti_zebra) {
    cls.anti_zebra_split_h = is_split_zebra_h(t);
    cls.anti_zebra_split_v = is_split_zebra_v(t);
  }

  const bool zebra_degenerate = cls.split_zebra() && (cls.nested || cls.anti_nested);
  const bool anti_degenerate = cls.split_anti_zebra() && (is_nested(t) || is_anti_nested(t));
  cls.degenerate_split = zebra_degenerate || anti_degenerate;

  cls.complement_of_split_zebra_or_antizebra = split_zebra_or_anti(complement(a));
  return cls;
}

std::size_t zebra_distance(const BinaryMatrix& a) {
  // Exact minimum over all zebras of the same shape: dynamic programme over the per-row
  // (prefix n, suffix s) pairs with n non-increasing and s non-decreasing.
  const std::size_t p = a.rows();
  const std::size_t q = a.cols();
  const std::size_t w = q + 1;
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;

  std::vector<std::size_t> prev(w * w, 0);  // row "-1": every state reachable at cost 0
  std::vector<std::size_t> best(w * w, inf);
  std::vector<std::size_t> cur(w * w, inf);
  std::vector<std::size_t> ones(w, 0);

  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < q; ++c) ones[c + 1] = ones[c] + (a(r, c) ? 1 : 0);

    // best[n][s] = min over n' >= n, s' <= s of prev[n'][s'].
    for (std::size_t n = q + 1; n-- > 0;) {
      for (std::size_t s = 0; s <= q; ++s) {
        std::size_t v = n + s <= q ? prev[n * w + s] : inf;
        if (n + 1 <= q) v = std::min(v, best[(n + 1) * w + s]);
        if (s > 0) v = std::min(v, best[n * w + s - 1]);
        best[n * w + s] = v;
      }
    }

    for (std::size_t n = 0; n <= q; ++n) {
      for (std::size_t s = 0; n + s <= q; ++s) {
        const std::size_t zeros_prefix = n - ones[n];
        const std::size_t ones_middle = ones[q - s] - ones[n];
        const std::size_t zeros_suffix = s - (ones[q] - ones[q - s]);
        cur[n * w + s] = best[n * w + s] + zeros_prefix + ones_middle + zeros_suffix;
      }
      for (std::size_t s = q - n + 1; s <= q; ++s) cur[n * w + s] = inf;
    }
    std::swap(prev, cur);
  }
  return *std::min_element(prev.begin(), prev.end());
}

std::size_t anti_zebra_distance(const BinaryMatrix& a) { return zebra_distance(anti_transform(a)); }

namespace {

std::size_t parse_dimension(std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError(std::string("invalid ") + what + " in matrix header");
  }
  return value;
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty matrix file");

  const std::string_view header = lines.front();
  const std::size_t space = header.find(' ');
  if (space == std::string_view::npos) throw ParseError("matrix header must be \"p q\"");
  const std::size_t p = parse_dimension(header.substr(0, space), "row count");
  const std::size_t q = parse_dimension(header.substr(space + 1), "column count");
  if (p == 0 || q == 0) throw ParseError("matrix dimensions must be at least 1");
  if (lines.size() != p + 1) {
    throw ParseError("expected " + std::to_string(p) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }

  BinaryMatrix m(p, q);
  for (std::size_t r = 0; r < p; ++r) {
    const std::string_view row = lines[r + 1];
    if (row.size() != q) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                       " characters, expected " + std::to_string(q));
    }
    for (std::size_t c = 0; c < q; ++c) {
      if (row[c] != '0' && row[c] != '1') {
        throw ParseError("row " + std::to_string(r + 1) + " contains a character other than 0/1");
      }
      if (row[c] == '1') m.set(r, c, true);
    }
  }
  return m;
}

BinaryMatrix read_matrix(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_matrix(text);
}

BinaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return read_matrix(in);
}

std::string format_matrix(const BinaryMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  out.reserve(out.size() + a.rows() * (a.cols() + 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.push_back(a(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

void write_matrix(std::ostream& out, const BinaryMatrix& a) { out << format_matrix(a); }

void write_matrix_file(const std::string& path, const BinaryMatrix& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  write_matrix(out, a);
}

}  // namespace switchgraph
