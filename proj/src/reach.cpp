#include "switchgraph/reach.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

#include "switchgraph/error.hpp"
#include "switchgraph/oracle.hpp"

namespace switchgraph {

DiffMatrix DiffMatrix::from_grid(IntGrid entries) {
  const std::size_t p = entries.rows();
  const std::size_t q = entries.cols();
  std::vector<std::int64_t> col_totals(q, 0);
  for (std::size_t r = 0; r < p; ++r) {
    std::int64_t row_total = 0;
    for (std::size_t c = 0; c < q; ++c) {
      const auto v = entries(r, c);
      if (v < -1 || v > 1) throw std::invalid_argument("difference entries must be in {-1,0,1}");
      row_total += v;
      col_totals[c] += v;
    }
    if (row_total != 0) throw MarginMismatch("difference matrix row does not sum to zero");
  }
  for (auto v : col_totals) {
    if (v != 0) throw MarginMismatch("difference matrix column does not sum to zero");
  }
  return DiffMatrix(std::move(entries));
}

bool DiffMatrix::is_zero() const noexcept {
  return std::all_of(entries_.data().begin(), entries_.data().end(),
                     [](std::int64_t v) { return v == 0; });
}

DiffMatrix diff(const BinaryMatrix& a, const BinaryMatrix& a_prime) {
  if (a.rows() != a_prime.rows() || a.cols() != a_prime.cols()) {
    throw DimensionMismatch("matrices have different dimensions");
  }
  if (!std::ranges::equal(a.row_sums(), a_prime.row_sums()) ||
      !std::ranges::equal(a.col_sums(), a_prime.col_sums())) {
    throw MarginMismatch("matrices have different row or column sums");
  }
  IntGrid m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m(r, c) = static_cast<std::int64_t>(a_prime(r, c)) - static_cast<std::int64_t>(a(r, c));
    }
  }
  return DiffMatrix::from_grid(std::move(m));
}

std::int64_t TGrid::max() const {
  if (coeffs.empty()) return 0;
  return *std::max_element(coeffs.data().begin(), coeffs.data().end());
}

std::int64_t TGrid::total() const {
  std::int64_t s = 0;
  for (auto v : coeffs.data()) s += v;
  return s;
}

bool TGrid::is_zero() const {
  return std::all_of(coeffs.data().begin(), coeffs.data().end(),
                     [](std::int64_t v) { return v == 0; });
}

TGrid compute_T(const IntGrid& m) {
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  TGrid t;
  t.coeffs = IntGrid(p > 0 ? p - 1 : 0, q > 0 ? q - 1 : 0);
  // prefix(r, c) = sum of m over rows <= r and cols <= c, built row by row.
  std::vector<std::int64_t> col_prefix(q, 0);
  for (std::size_t r = 0; r + 1 < p; ++r) {
    std::int64_t running = 0;
    for (std::size_t c = 0; c + 1 < q; ++c) {
      running += m(r, c);
      col_prefix[c] += running;
      t.coeffs(r, c) = col_prefix[c];
      if (col_prefix[c] < 0) t.nonnegative = false;
    }
  }
  return t;
}

TGrid compute_T(const DiffMatrix& m) { return compute_T(m.grid()); }

IntGrid reconstruct_from_T(const IntGrid& t) {
  const std::size_t p = t.rows() + 1;
  const std::size_t q = t.cols() + 1;
  auto at = [&](std::ptrdiff_t r, std::ptrdiff_t c) -> std::int64_t {
    if (r < 0 || c < 0 || r >= static_cast<std::ptrdiff_t>(t.rows()) ||
        c >= static_cast<std::ptrdiff_t>(t.cols())) {
      return 0;
    }
    return t(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  };
  IntGrid m(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const auto r = static_cast<std::ptrdiff_t>(i);
      const auto c = static_cast<std::ptrdiff_t>(j);
      m(i, j) = at(r, c) + at(r - 1, c - 1) - at(r, c - 1) - at(r - 1, c);
    }
  }
  return m;
}

namespace {

// Occupancy bitmap of a cell set over its bounding box grown by `pad` on every side.
struct LocalMap {
  std::ptrdiff_t r0 = 0;
  std::ptrdiff_t c0 = 0;
  std::size_t h = 0;
  std::size_t w = 0;
  std::vector<std::uint8_t> occ;

  LocalMap(const std::vector<Cell>& cells, std::ptrdiff_t pad) {
    std::ptrdiff_t rmin = PTRDIFF_MAX, cmin = PTRDIFF_MAX, rmax = PTRDIFF_MIN, cmax = PTRDIFF_MIN;
    for (const auto& cell : cells) {
      rmin = std::min(rmin, static_cast<std::ptrdiff_t>(cell.r));
      rmax = std::max(rmax, static_cast<std::ptrdiff_t>(cell.r));
      cmin = std::min(cmin, static_cast<std::ptrdiff_t>(cell.c));
      cmax = std::max(cmax, static_cast<std::ptrdiff_t>(cell.c));
    }
    r0 = rmin - pad;
    c0 = cmin - pad;
    h = static_cast<std::size_t>(rmax - rmin + 1 + 2 * pad);
    w = static_cast<std::size_t>(cmax - cmin + 1 + 2 * pad);
    occ.assign(h * w, 0);
    for (const auto& cell : cells) {
      occ[index(static_cast<std::ptrdiff_t>(cell.r), static_cast<std::ptrdiff_t>(cell.c))] = 1;
    }
  }

  std::size_t index(std::ptrdiff_t r, std::ptrdiff_t c) const {
    return static_cast<std::size_t>(r - r0) * w + static_cast<std::size_t>(c - c0);
  }
  bool inside(std::ptrdiff_t r, std::ptrdiff_t c) const {
    return r >= r0 && c >= c0 && r < r0 + static_cast<std::ptrdiff_t>(h) &&
           c < c0 + static_cast<std::ptrdiff_t>(w);
  }
  bool filled(std::ptrdiff_t r, std::ptrdiff_t c) const { return inside(r, c) && occ[index(r, c)]; }
};

constexpr std::array<std::array<int, 2>, 4> kNeighbours{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

}  // namespace

std::vector<std::vector<Cell>> connected_components(const std::vector<Cell>& cells) {
  std::vector<std::vector<Cell>> out;
  if (cells.empty()) return out;
  std::set<Cell> remaining(cells.begin(), cells.end());
  while (!remaining.empty()) {
    std::vector<Cell> comp;
    std::deque<Cell> queue{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!queue.empty()) {
      const Cell cur = queue.front();
      queue.pop_front();
      comp.push_back(cur);
      for (const auto& [dr, dc] : kNeighbours) {
        const auto nr = static_cast<std::ptrdiff_t>(cur.r) + dr;
        const auto nc = static_cast<std::ptrdiff_t>(cur.c) + dc;
        if (nr < 0 || nc < 0) continue;
        auto it = remaining.find(Cell{static_cast<std::size_t>(nr), static_cast<std::size_t>(nc)});
        if (it != remaining.end()) {
          queue.push_back(*it);
          remaining.erase(it);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t count_holes(const std::vector<Cell>& component) {
  if (component.empty()) return 0;
  const LocalMap map(component, 1);
  // 0 = free, 1 = component, 2 = visited free.
  std::vector<std::uint8_t> state = map.occ;
  auto flood = [&](std::size_t start) {
    std::deque<std::size_t> queue{start};
    state[start] = 2;
    while (!queue.empty()) {
      const std::size_t idx = queue.front();
      queue.pop_front();
      const auto r = static_cast<std::ptrdiff_t>(idx / map.w);
      const auto c = static_cast<std::ptrdiff_t>(idx % map.w);
      for (const auto& [dr, dc] : kNeighbours) {
        const auto nr = r + dr;
        const auto nc = c + dc;
        if (nr < 0 || nc < 0 || nr >= static_cast<std::ptrdiff_t>(map.h) ||
            nc >= static_cast<std::ptrdiff_t>(map.w)) {
          continue;
        }
        const auto nidx = static_cast<std::size_t>(nr) * map.w + static_cast<std::size_t>(nc);
        if (state[nidx] == 0) {
          state[nidx] = 2;
          queue.push_back(nidx);
        }
      }
    }
  };
  flood(0);  // the padded corner is always outside
  std::size_t holes = 0;
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    if (state[idx] == 0) {
      ++holes;
      flood(idx);
    }
  }
  return holes;
}

std::vector<PolyominoLevel> polyomino_levels(const IntGrid& t) {
  std::vector<PolyominoLevel> levels;
  std::int64_t top = 0;
  for (auto v : t.data()) top = std::max(top, v);
  for (std::int64_t lvl = 1; lvl <= top; ++lvl) {
    PolyominoLevel level;
    level.level = lvl;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      for (std::size_t c = 0; c < t.cols(); ++c) {
        if (t(r, c) >= lvl) level.cells.push_back({r, c});
      }
    }
    level.components = connected_components(level.cells);
    for (const auto& comp : level.components) level.holes.push_back(count_holes(comp));
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<PolyominoLevel> polyomino_levels(const TGrid& t) { return polyomino_levels(t.coeffs); }

bool condition_ii(const IntGrid& t) {
  for (const auto& level : polyomino_levels(t)) {
    for (auto h : level.holes) {
      if (h != 0) return false;
    }
  }
  return true;
}

bool condition_iii(const IntGrid& t) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      // Right, down and both down-diagonals cover every Chebyshev-1 pair once.
      const std::int64_t v = t(r, c);
      auto far = [&](std::size_t r2, std::size_t c2) {
        const std::int64_t d = t(r2, c2) - v;
        return d > 1 || d < -1;
      };
      if (c + 1 < t.cols() && far(r, c + 1)) return false;
      if (r + 1 < t.rows()) {
        if (far(r + 1, c)) return false;
        if (c + 1 < t.cols() && far(r + 1, c + 1)) return false;
        if (c > 0 && far(r + 1, c - 1)) return false;
      }
    }
  }
  return true;
}

ConditionReport check_conditions(const DiffMatrix& m) {
  ConditionReport rep;
  rep.t = compute_T(m);
  rep.cond_i = rep.t.nonnegative;
  rep.cond_ii = condition_ii(rep.t.coeffs);
  rep.cond_iii = condition_iii(rep.t.coeffs);
  return rep;
}

Rect rect_of(const SwitchCoord& c) noexcept { return Rect{c.i, c.j, c.k, c.l}; }

namespace {

struct Dir {
  int dr = 0;
  int dc = 0;
  friend bool operator==(const Dir&, const Dir&) = default;
};

// Screen orientation (rows grow downwards): a right turn maps (dr, dc) to (dc, -dr).
Dir turn_right(Dir d) { return {d.dc, -d.dr}; }
Dir turn_left(Dir d) { return {-d.dc, d.dr}; }

struct Vertex {
  std::ptrdiff_t r = 0;
  std::ptrdiff_t c = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Corner {
  Vertex at;
  bool right = false;  // convex when the contour is followed clockwise
};

// Outer contour of a component, followed clockwise (interior on the right), reduced to its
// corners. `lengths[t]` is the length of the side from corner t to corner t+1.
struct Contour {
  std::vector<Corner> corners;
  std::vector<std::size_t> lengths;
  std::vector<Dir> dirs;
};

Contour trace_contour(const std::vector<Cell>& component) {
  const LocalMap map(component, 1);
  auto cell_in = [&](std::ptrdiff_t r, std::ptrdiff_t c) { return map.filled(r, c); };

  // A boundary side leaves vertex v heading d when the cell on its right is filled and the
  // cell on its left is not. For heading d from vertex (r, c) those cells are:
  //   east:  right (r, c),     left (r-1, c)
  //   south: right (r, c-1),   left (r, c)
  //   west:  right (r-1, c-1), left (r, c-1)
  //   north: right (r-1, c),   left (r-1, c-1)
  auto has_side = [&](Vertex v, Dir d) {
    if (d == Dir{0, 1}) return cell_in(v.r, v.c) && !cell_in(v.r - 1, v.c);
    if (d == Dir{1, 0}) return cell_in(v.r, v.c - 1) && !cell_in(v.r, v.c);
    if (d == Dir{0, -1}) return cell_in(v.r - 1, v.c - 1) && !cell_in(v.r, v.c - 1);
    return cell_in(v.r - 1, v.c) && !cell_in(v.r - 1, v.c - 1);
  };

  const Cell first = *std::min_element(component.begin(), component.end());
  const Vertex start{static_cast<std::ptrdiff_t>(first.r), static_cast<std::ptrdiff_t>(first.c)};
  const Dir start_dir{0, 1};

  std::vector<Vertex> verts;
  std::vector<Dir> heads;
  Vertex v = start;
  Dir d = start_dir;
  do {
    verts.push_back(v);
    heads.push_back(d);
    v = Vertex{v.r + d.dr, v.c + d.dc};
    // Prefer the right turn so a pinch vertex keeps hugging the same cell.
    const Dir options[3] = {turn_right(d), d, turn_left(d)};
    bool moved = false;
    for (const Dir& o : options) {
      if (has_side(v, o)) {
        d = o;
        moved = true;
        break;
      }
    }
    if (!moved) throw InternalInvariantViolation("contour trace lost the boundary");
  } while (!(v == start && d == start_dir));

  Contour out;
  const std::size_t n = verts.size();
  for (std::size_t e = 0; e < n; ++e) {
    const Dir in = heads[(e + n - 1) % n];
    const Dir o = heads[e];
    if (in == o) continue;
    out.corners.push_back({verts[e], o == turn_right(in)});
    out.dirs.push_back(o);
  }
  const std::size_t k = out.corners.size();
  out.lengths.resize(k);
  for (std::size_t t = 0; t < k; ++t) {
    const Vertex a = out.corners[t].at;
    const Vertex b = out.corners[(t + 1) % k].at;
    out.lengths[t] = static_cast<std::size_t>(std::abs(b.r - a.r) + std::abs(b.c - a.c));
  }
  return out;
}

bool is_rectangle(const std::vector<Cell>& component) {
  const LocalMap map(component, 0);
  return component.size() == map.h * map.w;
}

}  // namespace

std::vector<Motif> find_motifs(const std::vector<Cell>& component) {
  std::vector<Motif> out;
  if (component.empty()) return out;
  if (is_rectangle(component)) {
    const LocalMap map(component, 0);
    const auto r0 = static_cast<std::size_t>(map.r0);
    const auto c0 = static_cast<std::size_t>(map.c0);
    out.push_back({Rect{r0, r0 + map.h, c0, c0 + map.w}, 1});
    return out;
  }

  const LocalMap map(component, 1);
  const Contour contour = trace_contour(component);
  const std::size_t k = contour.corners.size();
  std::set<Motif> found;
  for (std::size_t t = 0; t < k; ++t) {
    const Corner& b = contour.corners[t];
    const Corner& c = contour.corners[(t + 1) % k];
    if (!b.right || !c.right) continue;
    const Corner& a = contour.corners[(t + k - 1) % k];
    const Corner& e = contour.corners[(t + 2) % k];
    const std::size_t ab = contour.lengths[(t + k - 1) % k];
    const std::size_t cd = contour.lengths[(t + 1) % k];

    int kind = 0;
    if (ab == cd && !a.right && !e.right) {
      kind = 2;
    } else if (ab < cd && !a.right) {
      kind = 3;
    } else if (cd < ab && !e.right) {
      kind = 3;
    }
    if (kind == 0) continue;

    const std::size_t h = std::min(ab, cd);
    const Dir up = contour.dirs[(t + 1) % k];  // from C towards D, into the rectangle side
    const Vertex b2{b.at.r + up.dr * static_cast<std::ptrdiff_t>(h),
                    b.at.c + up.dc * static_cast<std::ptrdiff_t>(h)};
    const std::ptrdiff_t rmin = std::min({b.at.r, c.at.r, b2.r});
    const std::ptrdiff_t rmax = std::max({b.at.r, c.at.r, b2.r});
    const std::ptrdiff_t cmin = std::min({b.at.c, c.at.c, b2.c});
    const std::ptrdiff_t cmax = std::max({b.at.c, c.at.c, b2.c});

    bool inside = true;
    for (std::ptrdiff_t r = rmin; r < rmax && inside; ++r) {
      for (std::ptrdiff_t cc = cmin; cc < cmax; ++cc) {
        if (!map.filled(r, cc)) {
          inside = false;
          break;
        }
      }
    }
    if (!inside) continue;
    found.insert(Motif{Rect{static_cast<std::size_t>(rmin), static_cast<std::size_t>(rmax),
                            static_cast<std::size_t>(cmin), static_cast<std::size_t>(cmax)},
                       kind});
  }
  // A rectangle reached both as motif 2 and 3 is kept once, with the lower kind.
  for (const auto& m : found) {
    if (!out.empty() && out.back().rect == m.rect) continue;
    out.push_back(m);
  }
  return out;
}

Motif find_motif(const PolyominoLevel& level, std::size_t component) {
  if (component >= level.components.size()) throw std::out_of_range("component index");
  const auto motifs = find_motifs(level.components[component]);
  if (motifs.empty()) throw MotifNotFound("no contour motif on component");
  return motifs.front();
}

const char* to_string(ReachStatus s) noexcept {
  switch (s) {
    case ReachStatus::identical: return "identical";
    case ReachStatus::unreachable_condition_i: return "unreachable_condition_i";
    case ReachStatus::reachable_constructive: return "reachable_constructive";
    case ReachStatus::reachable_heuristic: return "reachable_heuristic";
    case ReachStatus::reachable_exhaustive: return "reachable_exhaustive";
    case ReachStatus::unreachable_exhaustive: return "unreachable_exhaustive";
    case ReachStatus::unknown: return "unknown";
  }
  return "unknown";
}

bool is_reachable(ReachStatus s) noexcept {
  return s == ReachStatus::identical || s == ReachStatus::reachable_constructive ||
         s == ReachStatus::reachable_heuristic || s == ReachStatus::reachable_exhaustive;
}

bool is_unreachable(ReachStatus s) noexcept {
  return s == ReachStatus::unreachable_condition_i || s == ReachStatus::unreachable_exhaustive;
}

bool validate_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                   const std::vector<SwitchCoord>& path) {
  if (a.rows() != a_prime.rows() || a.cols() != a_prime.cols()) return false;
  BinaryMatrix cur = a;
  for (const auto& c : path) {
    if (c.j >= cur.rows() || c.l >= cur.cols() || !(c.i < c.j && c.k < c.l)) return false;
    const auto s = checkerboard_at(cur, c);
    if (!s || *s != Sign::negative) return false;
    apply_switch_in_place(cur, c, Sign::positive);
  }
  return cur == a_prime;
}

namespace {

// Expected M at the rectangle corners: +1 top-left and bottom-right, -1 at the other two;
// motif 3 has a single 0 at its D corner.
bool corner_pattern_ok(const IntGrid& m, const Motif& motif) {
  const SwitchCoord c = motif.rect.as_switch();
  const std::array<std::int64_t, 4> got{m(c.i, c.k), m(c.j, c.l), m(c.i, c.l), m(c.j, c.k)};
  const std::array<std::int64_t, 4> want{1, 1, -1, -1};
  int zeros = 0;
  for (std::size_t idx = 0; idx < 4; ++idx) {
    if (got[idx] == 0) {
      ++zeros;
    } else if (got[idx] != want[idx]) {
      return false;
    }
  }
  return zeros == 0 || (zeros == 1 && motif.kind == 3);
}

}  // namespace

std::vector<SwitchCoord> constructive_path(const BinaryMatrix& a, const BinaryMatrix& a_prime) {
  const auto start = check_conditions(diff(a, a_prime));
  if (!(start.cond_i && start.cond_ii && start.cond_iii)) {
    throw std::invalid_argument("constructive path requires conditions (i), (ii) and (iii)");
  }

  BinaryMatrix cur = a;
  BinaryMatrix target = a_prime;
  std::vector<SwitchCoord> prefix;
  std::vector<SwitchCoord> suffix;
  TGrid t = start.t;
  std::int64_t budget = t.total();

  while (!t.is_zero()) {
    if (budget-- <= 0) throw InternalInvariantViolation("constructive loop exceeded sum of T");
    const std::int64_t top = t.max();
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < t.coeffs.rows(); ++r) {
      for (std::size_t c = 0; c < t.coeffs.cols(); ++c) {
        if (t.coeffs(r, c) == top) cells.push_back({r, c});
      }
    }
    std::vector<Motif> candidates;
    for (const auto& comp : connected_components(cells)) {
      const auto motifs = find_motifs(comp);
      candidates.insert(candidates.end(), motifs.begin(), motifs.end());
    }
    if (candidates.empty()) throw InternalInvariantViolation("no motif on the top level");
    std::sort(candidates.begin(), candidates.end());
    const Motif& chosen = candidates.front();

    const IntGrid m = diff(cur, target).grid();
    if (!corner_pattern_ok(m, chosen)) {
      throw InternalInvariantViolation("motif corner signs disagree with the expected pattern");
    }
    const SwitchCoord sw = chosen.rect.as_switch();
    if (checkerboard_at(cur, sw) == Sign::negative) {
      apply_switch_in_place(cur, sw, Sign::positive);
      prefix.push_back(sw);
    } else if (checkerboard_at(target, sw) == Sign::positive) {
      apply_switch_in_place(target, sw, Sign::negative);
      suffix.push_back(sw);
    } else {
      throw InternalInvariantViolation("motif rectangle is not a usable checkerboard");
    }

    for (std::size_t r = chosen.rect.row_begin; r < chosen.rect.row_end; ++r) {
      for (std::size_t c = chosen.rect.col_begin; c < chosen.rect.col_end; ++c) --t.coeffs(r, c);
    }
    const auto now = check_conditions(diff(cur, target));
    if (now.t.coeffs != t.coeffs || !(now.cond_i && now.cond_ii && now.cond_iii)) {
      throw InternalInvariantViolation("switch did not crop the top level as expected");
    }
  }

  std::vector<SwitchCoord> path = std::move(prefix);
  path.insert(path.end(), suffix.rbegin(), suffix.rend());
  if (!validate_path(a, a_prime, path)) {
    throw InternalInvariantViolation("stitched constructive path failed validation");
  }
  return path;
}

std::optional<std::vector<SwitchCoord>> greedy_path(const BinaryMatrix& a,
                                                    const BinaryMatrix& a_prime) {
  TGrid t = compute_T(diff(a, a_prime));
  if (!t.nonnegative) return std::nullopt;
  BinaryMatrix cur = a;
  std::vector<SwitchCoord> path;
  while (!t.is_zero()) {
    bool advanced = false;
    for (const auto& cb : find_checkerboards(cur, Sign::negative)) {
      const Rect rect = rect_of(cb.coord);
      bool keeps = true;
      for (std::size_t r = rect.row_begin; r < rect.row_end && keeps; ++r) {
        for (std::size_t c = rect.col_begin; c < rect.col_end; ++c) {
          if (t.coeffs(r, c) < 1) {
            keeps = false;
            break;
          }
        }
      }
      if (!keeps) continue;
      apply_switch_in_place(cur, cb.coord, Sign::positive);
      for (std::size_t r = rect.row_begin; r < rect.row_end; ++r) {
        for (std::size_t c = rect.col_begin; c < rect.col_end; ++c) --t.coeffs(r, c);
      }
      path.push_back(cb.coord);
      advanced = true;
      break;
    }
    if (!advanced) return std::nullopt;
  }
  if (!(cur == a_prime)) throw InternalInvariantViolation("greedy walk ended away from target");
  return path;
}

ReachVerdict build_path(const BinaryMatrix& a, const BinaryMatrix& a_prime,
                        const ReachOptions& options) {
  const DiffMatrix m = diff(a, a_prime);
  ReachVerdict verdict;
  verdict.conditions = check_conditions(m);
  const auto& cond = verdict.conditions;

  if (m.is_zero()) {
    verdict.status = ReachStatus::identical;
    verdict.path = std::vector<SwitchCoord>{};
    return verdict;
  }
  if (!cond.cond_i) {
    verdict.status = ReachStatus::unreachable_condition_i;
    return verdict;
  }
  if (cond.cond_ii && cond.cond_iii) {
    verdict.status = ReachStatus::reachable_constructive;
    verdict.path = constructive_path(a, a_prime);
    return verdict;
  }
  if (options.use_heuristic) {
    if (auto path = greedy_path(a, a_prime)) {
      verdict.status = ReachStatus::reachable_heuristic;
      verdict.path = std::move(path);
      return verdict;
    }
  }
  if (options.max_states > 0) {
    const SearchResult res = search_path(a, a_prime, options.max_states);
    verdict.explored_states = res.explored;
    switch (res.outcome) {
      case SearchOutcome::found:
        verdict.status = ReachStatus::reachable_exhaustive;
        verdict.path = res.path;
        return verdict;
      case SearchOutcome::exhausted:
        verdict.status = ReachStatus::unreachable_exhaustive;
        return verdict;
      case SearchOutcome::capped:
        break;
    }
  }
  verdict.status = ReachStatus::unknown;
  return verdict;
}

}  // namespace switchgraph
