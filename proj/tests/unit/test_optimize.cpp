#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "switchgraph/optimize.hpp"
#include "switchgraph/oracle.hpp"

using namespace switchgraph;

namespace {

Graph sorted_er(std::size_t n, double p, std::uint64_t seed) {
  return sort_by_degree(gen_erdos_renyi(n, p, seed)).first;
}

Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("bit adjacency enumerates the same checkerboards as the graph layer") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = sorted_er(seed % 2 ? 11 : 70, 0.35, seed);
    const BitAdjacency bits(g);
    const auto expect = find_sym_checkerboards(g, Sign::negative);
    REQUIRE(bits.count_negative() == expect.size());
    for (std::size_t idx = 0; idx < expect.size(); idx += 1 + expect.size() / 40) {
      CHECK(bits.nth_negative(idx) == expect[idx]);
    }
  }
}

TEST_CASE("sampling detects sinks exactly") {
  Rng rng(1);
  CHECK_FALSE(sample_negative_checkerboard(complete(6), rng).has_value());
  CHECK_FALSE(sample_negative_checkerboard(Graph::empty(6), rng).has_value());

  // A degree-sorted graph with exactly one negative checkerboard.
  std::optional<Graph> single;
  for (std::uint64_t seed = 1; seed < 2000 && !single; ++seed) {
    const Graph g = sorted_er(6, 0.5, seed);
    if (count_sym_checkerboards(g, Sign::negative) == 1) single = g;
  }
  REQUIRE(single.has_value());
  const auto only = find_sym_checkerboards(*single, Sign::negative).front();
  for (int draw = 0; draw < 50; ++draw) {
    const auto c = sample_negative_checkerboard(*single, rng, 1 + draw % 3);
    REQUIRE(c.has_value());
    CHECK(*c == only);
  }
}

TEST_CASE("sampling is uniform over negative checkerboards") {
  std::optional<Graph> g;
  for (std::uint64_t seed = 1; seed < 500 && !g; ++seed) {
    const Graph h = sorted_er(8, 0.5, seed);
    const auto k = count_sym_checkerboards(h, Sign::negative);
    if (k >= 3 && k <= 12) g = h;
  }
  REQUIRE(g.has_value());
  const auto all = find_sym_checkerboards(*g, Sign::negative);
  const auto k = static_cast<double>(all.size());

  for (std::size_t cap : {std::size_t{0}, std::size_t{1}}) {
    Rng rng(99 + cap);
    std::map<SymSwitchCoord, int> freq;
    const int draws = 10000;
    for (int d = 0; d < draws; ++d) ++freq[*sample_negative_checkerboard(*g, rng, cap)];
    CHECK(freq.size() == all.size());
    const double expect = draws / k;
    const double sigma = std::sqrt(draws * (1 / k) * (1 - 1 / k));
    for (const auto& c : all) CHECK(std::abs(freq[c] - expect) < 5 * sigma);
  }
}

TEST_CASE("trajectory invariants") {
  const Graph g0 = sorted_er(40, 0.25, 4);
  RunOptions opt;
  opt.seed = 5;
  opt.lambda_every = 7;
  const Trajectory t = run(g0, opt);

  CHECK(t.termination == Termination::sink_reached);
  CHECK(count_sym_checkerboards(t.final_graph, Sign::negative) == 0);
  CHECK(std::equal(g0.degrees().begin(), g0.degrees().end(), t.final_graph.degrees().begin()));
  CHECK(t.initial == g0);

  Graph cur = g0;
  std::int64_t prev_m2 = t.initial_M2;
  double prev_z2 = t.initial_Z2;
  CHECK(prev_m2 == second_zagreb(g0));
  for (const auto& s : t.steps) {
    CHECK(sym_checkerboard_at(cur, s.coord) == Sign::negative);
    cur.switch_in_place(s.coord, Sign::positive);
    CHECK(s.M2 == second_zagreb(cur));
    CHECK(s.M2 >= prev_m2);
    CHECK(s.Z2 >= prev_z2);
    prev_m2 = s.M2;
    prev_z2 = s.Z2;
    const bool sampled = s.step % 7 == 0 || s.step == t.steps.size();
    CHECK(s.lambda1.has_value() == sampled);
  }
  CHECK(cur == t.final_graph);
  CHECK(t.final_lambda1 >= t.initial_lambda1 - 1e-9);
  CHECK(t.final_lambda1 == doctest::Approx(dense_top_eigen(t.final_graph).lambda1).epsilon(1e-9));
}

TEST_CASE("budget and degenerate starts") {
  const Trajectory k = run(complete(6), {});
  CHECK(k.termination == Termination::sink_reached);
  CHECK(k.steps.empty());
  CHECK(k.final_lambda1 == doctest::Approx(5.0));

  RunOptions opt;
  opt.budget = 3;
  const Trajectory b = run(sorted_er(40, 0.3, 2), opt);
  CHECK(b.termination == Termination::budget_exhausted);
  CHECK(b.steps.size() == 3);
  REQUIRE(b.steps.back().lambda1.has_value());

  CHECK_THROWS_AS(run(Graph::from_edges(3, {{1, 2}}), {}), std::invalid_argument);
}

TEST_CASE("trajectory CSV is exact and reproducible") {
  const Graph g0 = sorted_er(30, 0.3, 8);
  RunOptions opt;
  opt.seed = 12;
  const std::string a = trajectory_csv(run(g0, opt));
  const std::string b = trajectory_csv(run(g0, opt));
  CHECK(a == b);
  CHECK(a.rfind("step,i,j,k,l,M2,Z2,lambda1\n0,,,,,", 0) == 0);
  opt.seed = 13;
  CHECK(trajectory_csv(run(g0, opt)) != a);

  const auto second_line = a.substr(a.find('\n') + 1);
  const auto third_line = second_line.substr(second_line.find('\n') + 1);
  CHECK(third_line.rfind("1,", 0) == 0);
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(3.0) == "3");
}

TEST_CASE("snapshot rendering uses the matrix text format") {
  CHECK(snapshot_render(Graph::from_edges(2, {{0, 1}})) == "2 2\n01\n10\n");
  const Graph g = sorted_er(12, 0.4, 1);
  CHECK(parse_matrix(snapshot_render(g)) == g.adjacency());
}
