#include "switchgraph/optimize.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "switchgraph/error.hpp"

namespace switchgraph {

const char* to_string(Termination t) noexcept {
  return t == Termination::sink_reached ? "sink_reached" : "budget_exhausted";
}

BitAdjacency::BitAdjacency(const Graph& g)
    : n_(g.n()), words_((g.n() + 63) / 64), rows_(n_ * words_, 0) {
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (g.has_edge(u, v)) set(u, v, true);
    }
  }
}

void BitAdjacency::set(std::size_t u, std::size_t v, bool value) noexcept {
  auto& w = rows_[u * words_ + v / 64];
  const std::uint64_t bit = std::uint64_t{1} << (v % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void BitAdjacency::pair_masks(std::size_t i, std::size_t j, std::vector<std::uint64_t>& ks,
                              std::vector<std::uint64_t>& ls) const {
  const std::uint64_t* ri = &rows_[i * words_];
  const std::uint64_t* rj = &rows_[j * words_];
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t valid = ~std::uint64_t{0};
    if (w == words_ - 1 && n_ % 64 != 0) valid = (std::uint64_t{1} << (n_ % 64)) - 1;
    ks[w] = ~ri[w] & rj[w] & valid;
    ls[w] = ri[w] & ~rj[w] & valid;
  }
  // k must exceed i (canonical form); j never lies in ks since a_jj = 0.
  for (std::size_t w = 0; w <= i / 64; ++w) {
    if (w < i / 64) {
      ks[w] = 0;
    } else {
      const unsigned b = static_cast<unsigned>(i % 64);
      const std::uint64_t keep = b == 63 ? 0 : ~((std::uint64_t{2} << b) - 1);
      ks[w] &= keep;
    }
  }
  ls[j / 64] &= ~(std::uint64_t{1} << (j % 64));
}

std::uint64_t BitAdjacency::count_pairs(const std::vector<std::uint64_t>& ks,
                                        const std::vector<std::uint64_t>& ls) const {
  std::uint64_t total = 0;
  std::uint64_t below = 0;  // ks bits in earlier words
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t lw = ls[w];
    while (lw) {
      const int b = std::countr_zero(lw);
      const std::uint64_t lower = b == 0 ? 0 : (ks[w] & ((std::uint64_t{1} << b) - 1));
      total += below + static_cast<std::uint64_t>(std::popcount(lower));
      lw &= lw - 1;
    }
    below += static_cast<std::uint64_t>(std::popcount(ks[w]));
  }
  return total;
}

std::uint64_t BitAdjacency::count_negative() const {
  std::vector<std::uint64_t> ks(words_), ls(words_);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      pair_masks(i, j, ks, ls);
      total += count_pairs(ks, ls);
    }
  }
  return total;
}

SymSwitchCoord BitAdjacency::nth_negative(std::uint64_t index) const {
  std::vector<std::uint64_t> ks(words_), ls(words_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      pair_masks(i, j, ks, ls);
      const std::uint64_t here = count_pairs(ks, ls);
      if (index >= here) {
        index -= here;
        continue;
      }
      for (std::size_t k = 0; k < n_; ++k) {
        if (!((ks[k / 64] >> (k % 64)) & 1U)) continue;
        for (std::size_t l = k + 1; l < n_; ++l) {
          if (!((ls[l / 64] >> (l % 64)) & 1U)) continue;
          if (index == 0) return SymSwitchCoord{i, j, k, l};
          --index;
        }
      }
    }
  }
  throw std::out_of_range("checkerboard index out of range");
}

namespace {

bool negative_at(const BitAdjacency& a, std::size_t i, std::size_t j, std::size_t k,
                 std::size_t l) {
  return !a.edge(i, k) && a.edge(i, l) && a.edge(j, k) && !a.edge(j, l);
}

std::optional<SymSwitchCoord> sample_from(const BitAdjacency& a, Rng& rng, std::size_t cap) {
  const std::size_t n = a.n();
  if (n < 4) return std::nullopt;
  for (std::size_t draw = 0; draw < cap; ++draw) {
    std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    std::size_t k = rng.below(n);
    std::size_t l = rng.below(n - 1);
    if (l >= k) ++l;
    if (i > j) std::swap(i, j);
    if (k > l) std::swap(k, l);
    if (i == k || i == l || j == k || j == l) continue;
    if (negative_at(a, i, j, k, l)) return SymSwitchCoord::make(i, j, k, l);
  }
  const std::uint64_t total = a.count_negative();
  if (total == 0) return std::nullopt;
  return a.nth_negative(rng.below(total));
}

}  // namespace

std::optional<SymSwitchCoord> sample_negative_checkerboard(const Graph& g, Rng& rng,
                                                           std::size_t rejection_cap) {
  const BitAdjacency bits(g);
  return sample_from(bits, rng, rejection_cap == 0 ? 10 * g.n() : rejection_cap);
}

Trajectory run(const Graph& g0, const RunOptions& options) {
  if (!g0.degree_sorted()) throw std::invalid_argument("optimiser needs a degree-sorted graph");
  if (options.lambda_every == 0) throw std::invalid_argument("lambda_every must be positive");

  Trajectory traj;
  traj.initial = g0;
  traj.seed = options.seed;

  Graph g = g0;
  BitAdjacency bits(g0);
  const std::size_t cap = options.rejection_cap == 0 ? 10 * g.n() : options.rejection_cap;
  const double m = static_cast<double>(g.m());
  std::int64_t m2 = second_zagreb(g);
  auto z2_of = [&](std::int64_t v) { return m > 0 ? std::sqrt(static_cast<double>(v) / m) : 0.0; };

  traj.initial_M2 = m2;
  traj.initial_Z2 = z2_of(m2);
  traj.initial_lambda1 = power_iteration(g, options.spectral).lambda;

  Rng rng(options.seed);
  traj.termination = Termination::budget_exhausted;
  for (std::size_t step = 1; step <= options.budget; ++step) {
    const auto c = sample_from(bits, rng, cap);
    if (!c) {
      traj.termination = Termination::sink_reached;
      break;
    }
    m2 += m2_switch_delta(g, *c);
    g.switch_in_place(*c, Sign::positive);
    bits.set(c->i, c->k, true);
    bits.set(c->k, c->i, true);
    bits.set(c->j, c->l, true);
    bits.set(c->l, c->j, true);
    bits.set(c->i, c->l, false);
    bits.set(c->l, c->i, false);
    bits.set(c->j, c->k, false);
    bits.set(c->k, c->j, false);

    TrajectoryStep rec;
    rec.step = step;
    rec.coord = *c;
    rec.M2 = m2;
    rec.Z2 = z2_of(m2);
    if (step % options.lambda_every == 0) rec.lambda1 = power_iteration(g, options.spectral).lambda;
    traj.steps.push_back(rec);
  }
  if (traj.termination == Termination::budget_exhausted && bits.count_negative() == 0) {
    traj.termination = Termination::sink_reached;
  }

  if (traj.steps.empty()) {
    traj.final_lambda1 = traj.initial_lambda1;
  } else {
    auto& last = traj.steps.back();
    if (!last.lambda1) last.lambda1 = power_iteration(g, options.spectral).lambda;
    traj.final_lambda1 = *last.lambda1;
  }
  traj.final_graph = std::move(g);
  return traj;
}

std::string snapshot_render(const Graph& g) { return format_matrix(g.adjacency()); }

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "step,i,j,k,l,M2,Z2,lambda1\n";
  out << "0,,,,," << t.initial_M2 << ',' << format_double(t.initial_Z2) << ','
      << format_double(t.initial_lambda1) << '\n';
  for (const auto& s : t.steps) {
    out << s.step << ',' << s.coord.i + 1 << ',' << s.coord.j + 1 << ',' << s.coord.k + 1 << ','
        << s.coord.l + 1 << ',' << s.M2 << ',' << format_double(s.Z2) << ',';
    if (s.lambda1) out << format_double(*s.lambda1);
    out << '\n';
  }
}

std::string trajectory_csv(const Trajectory& t) {
  std::ostringstream os;
  write_trajectory_csv(os, t);
  return os.str();
}

}  // namespace switchgraph
