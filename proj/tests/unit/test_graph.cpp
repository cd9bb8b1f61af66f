#include <doctest.h>

#include <cmath>

#include "switchgraph/error.hpp"
#include "switchgraph/graph.hpp"
#include "switchgraph/oracle.hpp"
#include "switchgraph/rng.hpp"

using namespace switchgraph;

namespace {

Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves, bool centre_last = false) {
  const std::size_t c = centre_last ? leaves : 0;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t v = 0; v <= leaves; ++v)
    if (v != c) e.emplace_back(c, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph sorted_er(std::size_t n, double p, std::uint64_t seed) {
  return sort_by_degree(gen_erdos_renyi(n, p, seed)).first;
}

int sgn(double x) { return (x > 1e-12) - (x < -1e-12); }

}  // namespace

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(BinaryMatrix::from_strings({"10", "01"})), std::invalid_argument);
  CHECK_THROWS_AS(Graph(BinaryMatrix::from_strings({"01", "00"})), std::invalid_argument);
  CHECK_THROWS_AS(Graph(BinaryMatrix::from_strings({"011", "101"})), std::invalid_argument);
  const Graph k4 = complete(4);
  CHECK(k4.n() == 4);
  CHECK(k4.m() == 6);
  CHECK(k4.degree_sorted());
  CHECK(Graph::empty(3).m() == 0);
}

TEST_CASE("symmetric switch coordinates") {
  CHECK(SymSwitchCoord::make(2, 3, 0, 1) == SymSwitchCoord{0, 1, 2, 3});
  CHECK(SymSwitchCoord::make(0, 3, 1, 2) == SymSwitchCoord{0, 3, 1, 2});
  CHECK_THROWS(SymSwitchCoord::make(0, 1, 1, 2));
  CHECK_THROWS(SymSwitchCoord::make(1, 0, 2, 3));
}

TEST_CASE("sort_by_degree") {
  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const auto [sorted, perm] = sort_by_degree(path);
  CHECK(perm == std::vector<std::size_t>{1, 0, 2});
  CHECK(sorted.degree_sorted());
  CHECK(sort_by_degree(complete(3)).second == std::vector<std::size_t>{0, 1, 2});
  const auto [s, p] = sort_by_degree(star(3, true));
  CHECK(p.front() == 3);
  CHECK(s.degree(0) == 3);
  CHECK(permute(path, perm) == sorted);
}

TEST_CASE("symmetric checkerboards match a brute-force scan") {
  CHECK(find_sym_checkerboards(complete(4), Sign::negative).empty());
  CHECK(find_sym_checkerboards(complete(4), Sign::positive).empty());
  CHECK(find_sym_checkerboards(Graph::empty(5), Sign::negative).empty());

  // 4-cycle 0-2-1-3-0: the pairings {02,13} and {03,12} are negative, {01,23} is neither.
  const Graph c4 = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(find_sym_checkerboards(c4, Sign::negative) ==
        std::vector<SymSwitchCoord>{{0, 2, 1, 3}, {0, 3, 1, 2}});
  CHECK(count_sym_checkerboards(c4, Sign::positive) == 0);

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = sorted_er(9, 0.45, seed);
    std::size_t pos = 0, neg = 0;
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = i + 1; j < 9; ++j)
        for (std::size_t k = i + 1; k < 9; ++k)
          for (std::size_t l = k + 1; l < 9; ++l) {
            if (k == j || l == j) continue;
            const int s = g.has_edge(i, k) + g.has_edge(j, l) - g.has_edge(i, l) - g.has_edge(j, k);
            pos += s == 2;
            neg += s == -2;
          }
    CHECK(count_sym_checkerboards(g, Sign::positive) == pos);
    CHECK(count_sym_checkerboards(g, Sign::negative) == neg);
  }
}

TEST_CASE("symmetric switches keep degrees and follow the M2 delta law") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = sorted_er(12, 0.4, seed);
    const auto m2 = second_zagreb(g);
    for (const auto& c : find_sym_checkerboards(g, Sign::negative)) {
      const Graph h = apply_sym_switch(g, c, Sign::positive);
      CHECK(std::equal(g.degrees().begin(), g.degrees().end(), h.degrees().begin()));
      CHECK(h.m() == g.m());
      const auto delta = second_zagreb(h) - m2;
      CHECK(delta == m2_switch_delta(g, c));
      CHECK(delta >= 0);
      const bool tie = g.degree(c.i) == g.degree(c.j) || g.degree(c.k) == g.degree(c.l);
      CHECK((delta == 0) == tie);
      CHECK(apply_sym_switch(h, c, Sign::negative) == g);
      const auto r0 = assortativity(g);
      const auto r1 = assortativity(h);
      if (r0 && r1) CHECK(sgn(*r1 - *r0) == (delta > 0 ? 1 : 0));
    }
  }
  CHECK_THROWS_AS(apply_sym_switch(complete(4), {0, 1, 2, 3}, Sign::positive), InvalidSwitch);
}

TEST_CASE("Zagreb indices and assortativity") {
  const Zagreb k4 = zagreb(complete(4));
  CHECK(k4.M1 == 36);
  CHECK(k4.M2 == 54);
  CHECK(k4.Z1 == doctest::Approx(3.0));
  CHECK(k4.Z2 == doctest::Approx(3.0));
  const Zagreb s = zagreb(star(3));
  CHECK(s.M1 == 12);
  CHECK(s.M2 == 9);
  CHECK(s.Z2 == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(zagreb(Graph::empty(3)), DegenerateGraph);
  CHECK_THROWS_AS(assortativity(Graph::empty(3)), DegenerateGraph);
  CHECK_FALSE(assortativity(complete(5)).has_value());
  REQUIRE(assortativity(star(3)).has_value());
  CHECK(*assortativity(star(3)) == doctest::Approx(-1.0));
}

TEST_CASE("spectral radius") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CHECK(spectral_radius(complete(n)).lambda1 == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-10));
  }
  const SpectralReport s = spectral_radius(star(3));
  CHECK(s.lambda1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(s.converged);
  double norm = 0;
  for (double x : s.eigvec) {
    CHECK(x >= 0.0);
    norm += x * x;
  }
  CHECK(norm == doctest::Approx(1.0));
  // Bipartite graphs do not oscillate thanks to the shift.
  const Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(spectral_radius(c6).lambda1 == doctest::Approx(2.0).epsilon(1e-10));

  const SpectralReport reg = spectral_radius(c6);
  CHECK(reg.Z1 == doctest::Approx(2.0));
  REQUIRE(reg.Z2.has_value());
  CHECK(*reg.Z2 == doctest::Approx(2.0));
  CHECK_FALSE(reg.r.has_value());

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Graph g = gen_erdos_renyi(15, 0.3, seed);
    const SpectralReport rep = spectral_radius(g);
    CHECK(rep.lambda1 >= rep.Z1 - 1e-9);
    CHECK(std::abs(rep.lambda1 - dense_top_eigen(g).lambda1) < 1e-8);
  }
}

TEST_CASE("disconnected graphs report the global spectral radius") {
  // K4 plus a disjoint edge.
  auto e = std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}};
  const Graph g = Graph::from_edges(6, e);
  const PowerResult pr = power_iteration(g);
  CHECK(pr.lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(pr.support_proper);
  CHECK_FALSE(power_iteration(complete(5)).support_proper);
}

TEST_CASE("lambda1 switch bound holds for single positive switches") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = sorted_er(20, 0.3, seed);
    const auto x = dense_top_eigen(g).vector;
    const double l0 = dense_top_eigen(g).lambda1;
    for (const auto& c : find_sym_checkerboards(g, Sign::negative)) {
      const double l1 = dense_top_eigen(apply_sym_switch(g, c, Sign::positive)).lambda1;
      CHECK(l1 - l0 >= 2 * (x[c.i] - x[c.j]) * (x[c.k] - x[c.l]) - 1e-8);
    }
  }
}

TEST_CASE("generators") {
  CHECK(gen_erdos_renyi(100, 0.0, 4).m() == 0);
  CHECK(gen_erdos_renyi(10, 1.0, 4).m() == 45);
  CHECK(gen_erdos_renyi(40, 0.3, 9) == gen_erdos_renyi(40, 0.3, 9));
  CHECK_THROWS(gen_erdos_renyi(10, 1.5, 1));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const double m = static_cast<double>(gen_erdos_renyi(100, 0.2, seed).m());
    const double sd = std::sqrt(4950 * 0.2 * 0.8);
    CHECK(std::abs(m - 990.0) < 3 * sd);
  }

  const Graph grid = gen_small_world(10, 0.0, 1);
  CHECK(grid.n() == 100);
  CHECK(grid.m() == 180);
  CHECK(grid.degree(0) == 2);
  CHECK(grid.degree(11) == 4);
  const Graph sw = gen_small_world(10, 0.1, 3);
  CHECK(sw.m() == 180);
  CHECK(sw == gen_small_world(10, 0.1, 3));
  CHECK_FALSE(sw == grid);

  const BinaryMatrix z = gen_split_zebra({3, 2, 1, 2}, {2, 2, 2, 2});
  CHECK(std::vector<int>(z.row_sums().begin(), z.row_sums().end()) == std::vector<int>{3, 2, 1, 2});
  CHECK(std::vector<int>(z.col_sums().begin(), z.col_sums().end()) == std::vector<int>{2, 2, 2, 2});
  const MatrixClass cls = classify(z);
  CHECK(cls.split_zebra());
  CHECK_THROWS_AS(gen_split_zebra({1, 1}, {2, 1}), InfeasibleMargins);
  CHECK_THROWS_AS(gen_split_zebra({0, 2, 0}, {1, 0, 1}), InfeasibleMargins);
}
