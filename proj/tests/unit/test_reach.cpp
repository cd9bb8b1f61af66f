#include <doctest.h>

#include <set>

#include "switchgraph/binary_matrix.hpp"
#include "switchgraph/error.hpp"
#include "switchgraph/reach.hpp"
#include "switchgraph/rng.hpp"

using namespace switchgraph;

namespace {

IntGrid grid(const std::vector<std::vector<std::int64_t>>& rows) {
  IntGrid g(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) g(r, c) = rows[r][c];
  return g;
}

std::vector<Cell> cells_of(const std::vector<std::string>& picture) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < picture.size(); ++r)
    for (std::size_t c = 0; c < picture[r].size(); ++c)
      if (picture[r][c] == '#') out.push_back({r, c});
  return out;
}

struct Pair {
  BinaryMatrix a;
  BinaryMatrix b;
};

const Pair kConstructive{BinaryMatrix::from_strings({"001", "100", "110"}),
                 BinaryMatrix::from_strings({"100", "010", "101"})};
const Pair kHoled{BinaryMatrix::from_strings({"0001", "1101", "1011", "1000"}),
                 BinaryMatrix::from_strings({"1000", "1011", "1101", "0001"})};
const Pair kFourSwitch{BinaryMatrix::from_strings({"0011", "0011", "1100", "1100"}),
                 BinaryMatrix::from_strings({"1100", "1100", "0011", "0011"})};

BinaryMatrix random_matrix(std::size_t p, std::size_t q, Rng& rng) {
  BinaryMatrix a(p, q);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c) a.set(r, c, rng.below(2) == 1);
  return a;
}

// Random walk of positive switches.
BinaryMatrix walk(BinaryMatrix a, std::size_t steps, Rng& rng) {
  for (std::size_t s = 0; s < steps; ++s) {
    const auto neg = find_checkerboards(a, Sign::negative);
    if (neg.empty()) break;
    apply_switch_in_place(a, neg[rng.below(neg.size())].coord, Sign::positive);
  }
  return a;
}

}  // namespace

TEST_CASE("T-grid golden examples") {
  CHECK(compute_T(diff(kConstructive.a, kConstructive.b)).coeffs == grid({{1, 1}, {0, 1}}));
  CHECK(compute_T(diff(kHoled.a, kHoled.b)).coeffs == grid({{1, 1, 1}, {1, 0, 1}, {1, 1, 1}}));
  CHECK(compute_T(diff(kFourSwitch.a, kFourSwitch.b)).coeffs == grid({{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}));
  const TGrid t = compute_T(diff(kFourSwitch.a, kFourSwitch.b));
  CHECK(t.nonnegative);
  CHECK(t.max() == 4);
  CHECK(t.total() == 16);
  CHECK_FALSE(compute_T(diff(kConstructive.b, kConstructive.a)).nonnegative);
}

TEST_CASE("diff validation") {
  CHECK_THROWS_AS(diff(kConstructive.a, kHoled.a), DimensionMismatch);
  CHECK_THROWS_AS(diff(kConstructive.a, BinaryMatrix::from_strings({"111", "000", "000"})),
                  MarginMismatch);
  CHECK_THROWS(DiffMatrix::from_grid(grid({{1, 0}, {0, 0}})));
  CHECK_THROWS(DiffMatrix::from_grid(grid({{2, -2}, {-2, 2}})));
  CHECK(diff(kConstructive.a, kConstructive.a).is_zero());
}

TEST_CASE("the four-term relation inverts compute_T") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryMatrix a = random_matrix(5, 4, rng);
    const BinaryMatrix b = walk(a, rng.below(6), rng);
    const DiffMatrix m = diff(a, b);
    const TGrid t = compute_T(m);
    CHECK(reconstruct_from_T(t.coeffs) == m.grid());
    // Positive switch sequences never violate condition (i).
    CHECK(t.nonnegative);
  }
}

TEST_CASE("polyomino levels of the four-switch pair") {
  const auto levels = polyomino_levels(compute_T(diff(kFourSwitch.a, kFourSwitch.b)));
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].cells.size() == 9);
  CHECK(levels[1].cells == cells_of({".#.", "###", ".#."}));
  CHECK(levels[2].cells == std::vector<Cell>{{1, 1}});
  CHECK(levels[3].cells == std::vector<Cell>{{1, 1}});
  for (const auto& lv : levels) {
    CHECK(lv.components.size() == 1);
    CHECK(lv.holes == std::vector<std::size_t>{0});
  }
}

TEST_CASE("hole counting") {
  CHECK(count_holes(cells_of({"###", "#.#", "###"})) == 1);
  CHECK(count_holes(cells_of({"###", "###"})) == 0);
  CHECK(count_holes(cells_of({"#####", "#.#.#", "#####"})) == 2);
  // Squares meeting at a corner still seal a hole: the complement is 4-connected only.
  CHECK(count_holes(cells_of({"##.", "#.#", "###"})) == 1);
  CHECK(count_holes(cells_of({"#.", ".#"})) == 0);
  CHECK(count_holes(cells_of({"####", "#..#", "####"})) == 1);
  CHECK(connected_components(cells_of({"#.#", "...", "#.."})).size() == 3);
}

TEST_CASE("conditions on the golden examples") {
  const ConditionReport rc = check_conditions(diff(kConstructive.a, kConstructive.b));
  CHECK(rc.cond_i);
  CHECK(rc.cond_ii);
  CHECK(rc.cond_iii);

  const ConditionReport rh = check_conditions(diff(kHoled.a, kHoled.b));
  CHECK(rh.cond_i);
  CHECK_FALSE(rh.cond_ii);

  const ConditionReport rf = check_conditions(diff(kFourSwitch.a, kFourSwitch.b));
  CHECK(rf.cond_i);
  CHECK(rf.cond_ii);
  CHECK_FALSE(rf.cond_iii);

  CHECK(condition_iii(grid({{1, 2}, {2, 2}})));
  CHECK_FALSE(condition_iii(grid({{1, 2}, {2, 3}})));
  CHECK_FALSE(condition_iii(grid({{1, 2}, {2, 1}, {0, 3}})));
  // Border cells of value 2 are acceptable: only interior neighbours are compared.
  CHECK(condition_iii(grid({{2}})));
}

TEST_CASE("motif detection") {
  SUBCASE("a rectangle is motif 1") {
    const auto motifs = find_motifs(cells_of({"###", "###"}));
    REQUIRE_FALSE(motifs.empty());
    CHECK(motifs.front().kind == 1);
    CHECK(motifs.front().rect == Rect{0, 2, 0, 3});
  }
  SUBCASE("the X pentomino yields motif 2 at every arm tip") {
    const auto motifs = find_motifs(cells_of({".#.", "###", ".#."}));
    std::set<Rect> twos;
    for (const auto& m : motifs)
      if (m.kind == 2) twos.insert(m.rect);
    CHECK(twos == std::set<Rect>{{0, 1, 1, 2}, {1, 2, 0, 1}, {1, 2, 2, 3}, {2, 3, 1, 2}});
  }
  SUBCASE("every motif rectangle lies inside its component") {
    for (const auto& pic : std::vector<std::vector<std::string>>{
             {"##.", "###"}, {"#..", "###", "#.."}, {"####", "##..", "#..."}, {"##", "#."}}) {
      const auto comp = cells_of(pic);
      const std::set<Cell> inside(comp.begin(), comp.end());
      const auto motifs = find_motifs(comp);
      CHECK_FALSE(motifs.empty());
      for (const auto& m : motifs) {
        for (std::size_t r = m.rect.row_begin; r < m.rect.row_end; ++r)
          for (std::size_t c = m.rect.col_begin; c < m.rect.col_end; ++c)
            CHECK(inside.count({r, c}) == 1);
      }
    }
  }
  CHECK(rect_of(SwitchCoord{1, 3, 0, 2}) == Rect{1, 3, 0, 2});
  CHECK(Rect{1, 3, 0, 2}.as_switch() == SwitchCoord{1, 3, 0, 2});
}

TEST_CASE("path builders") {
  SUBCASE("the constructive pair") {
    const auto path = constructive_path(kConstructive.a, kConstructive.b);
    CHECK(validate_path(kConstructive.a, kConstructive.b, path));
    const ReachVerdict v = build_path(kConstructive.a, kConstructive.b);
    CHECK(v.status == ReachStatus::reachable_constructive);
    REQUIRE(v.path);
    CHECK(v.path->size() == 2);
  }
  SUBCASE("the four-switch pair needs the heuristic") {
    const ReachVerdict v = build_path(kFourSwitch.a, kFourSwitch.b);
    CHECK(v.status == ReachStatus::reachable_heuristic);
    REQUIRE(v.path);
    CHECK(v.path->size() == 4);
    CHECK(validate_path(kFourSwitch.a, kFourSwitch.b, *v.path));
  }
  SUBCASE("the holed pair is unreachable") {
    const ReachVerdict v = build_path(kHoled.a, kHoled.b);
    CHECK(v.status == ReachStatus::unreachable_exhaustive);
    CHECK_FALSE(greedy_path(kHoled.a, kHoled.b).has_value());
    CHECK(build_path(kHoled.a, kHoled.b, {0, true}).status == ReachStatus::unknown);
  }
  SUBCASE("identity and condition (i) failures") {
    const ReachVerdict same = build_path(kConstructive.a, kConstructive.a);
    CHECK(same.status == ReachStatus::identical);
    REQUIRE(same.path);
    CHECK(same.path->empty());
    CHECK(build_path(kConstructive.b, kConstructive.a).status == ReachStatus::unreachable_condition_i);
  }
  SUBCASE("validate_path rejects wrong endpoints and infeasible steps") {
    CHECK_FALSE(validate_path(kConstructive.a, kConstructive.b, {}));
    CHECK_FALSE(validate_path(kConstructive.a, kConstructive.b, {{0, 1, 0, 1}, {0, 1, 0, 1}}));
  }
  CHECK(is_reachable(ReachStatus::identical));
  CHECK(is_unreachable(ReachStatus::unreachable_condition_i));
  CHECK_FALSE(is_reachable(ReachStatus::unknown));
  CHECK_FALSE(is_unreachable(ReachStatus::unknown));
}

TEST_CASE("constructive paths raise the potential at each step") {
  Rng rng(17);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 100; ++trial) {
    const BinaryMatrix a = random_matrix(5, 5, rng);
    const BinaryMatrix b = walk(a, 1 + rng.below(5), rng);
    const ConditionReport cond = check_conditions(diff(a, b));
    if (!(cond.cond_i && cond.cond_ii && cond.cond_iii) || a == b) continue;
    ++built;
    const auto path = constructive_path(a, b);
    REQUIRE(validate_path(a, b, path));
    BinaryMatrix cur = a;
    for (const auto& c : path) {
      const auto before = potential(cur);
      apply_switch_in_place(cur, c, Sign::positive);
      CHECK(potential(cur) > before);
    }
  }
  CHECK(built == 100);
}
