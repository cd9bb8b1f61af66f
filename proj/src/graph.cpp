#include "switchgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "switchgraph/error.hpp"
#include "switchgraph/rng.hpp"

namespace switchgraph {

SymSwitchCoord SymSwitchCoord::make(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (!(i < j && k < l)) throw std::invalid_argument("symmetric switch needs i < j and k < l");
  if (i == k || i == l || j == k || j == l) {
    throw std::invalid_argument("symmetric switch vertices must be pairwise distinct");
  }
  if (k < i) return SymSwitchCoord{k, l, i, j};
  return SymSwitchCoord{i, j, k, l};
}

Graph::Graph(BinaryMatrix adjacency) : adj_(std::move(adjacency)) {
  if (adj_.rows() != adj_.cols()) throw std::invalid_argument("adjacency matrix must be square");
  std::size_t twice = 0;
  for (std::size_t u = 0; u < adj_.rows(); ++u) {
    if (adj_(u, u)) throw std::invalid_argument("adjacency matrix must have a zero diagonal");
    for (std::size_t v = u + 1; v < adj_.cols(); ++v) {
      if (adj_(u, v) != adj_(v, u)) throw std::invalid_argument("adjacency matrix must be symmetric");
    }
    twice += static_cast<std::size_t>(adj_.row_sums()[u]);
  }
  m_ = twice / 2;
}

Graph Graph::empty(std::size_t n) { return Graph(BinaryMatrix(n, n)); }

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  BinaryMatrix adj(n, n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n || u == v) throw std::invalid_argument("invalid edge");
    if (adj(u, v)) throw std::invalid_argument("duplicate edge");
    adj.set(u, v, true);
    adj.set(v, u, true);
  }
  return Graph(std::move(adj));
}

bool Graph::degree_sorted() const noexcept {
  const auto d = degrees();
  for (std::size_t v = 1; v < d.size(); ++v) {
    if (d[v] > d[v - 1]) return false;
  }
  return true;
}

void Graph::switch_in_place(const SymSwitchCoord& c, Sign direction) {
  const std::size_t n = this->n();
  if (c.j >= n || c.l >= n) throw InvalidSwitch("switch coordinates out of range");
  if (!(c.i < c.j && c.k < c.l) || c.i == c.k || c.i == c.l || c.j == c.k || c.j == c.l) {
    throw InvalidSwitch("symmetric switch vertices must be distinct with i < j and k < l");
  }
  const SwitchCoord upper = c.upper();
  const auto s = checkerboard_at(adj_, upper);
  const Sign required = direction == Sign::positive ? Sign::negative : Sign::positive;
  if (!s || *s != required) {
    throw InvalidSwitch(std::string(to_string(direction)) + " symmetric switch requires a " +
                        to_string(required) + " checkerboard");
  }
  const bool to_positive = direction == Sign::positive;
  auto put = [&](std::size_t u, std::size_t v, bool value) {
    adj_.set(u, v, value);
    adj_.set(v, u, value);
  };
  put(c.i, c.k, to_positive);
  put(c.j, c.l, to_positive);
  put(c.i, c.l, !to_positive);
  put(c.j, c.k, !to_positive);
}

std::pair<Graph, std::vector<std::size_t>> sort_by_degree(const Graph& g) {
  std::vector<std::size_t> perm(g.n());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const auto d = g.degrees();
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  return {permute(g, perm), perm};
}

Graph permute(const Graph& g, const std::vector<std::size_t>& perm) {
  const std::size_t n = g.n();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  BinaryMatrix adj(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.has_edge(perm[a], perm[b])) adj.set(a, b, true);
    }
  }
  return Graph(std::move(adj));
}

std::optional<Sign> sym_checkerboard_at(const Graph& g, const SymSwitchCoord& c) {
  if (c.i == c.k || c.i == c.l || c.j == c.k || c.j == c.l) return std::nullopt;
  return checkerboard_at(g.adjacency(), c.upper());
}

namespace {

template <class Visit>
void for_each_sym_checkerboard(const Graph& g, Sign sign, Visit&& visit) {
  const BinaryMatrix& a = g.adjacency();
  const std::size_t n = g.n();
  // Canonical form i < k; with i < j and k < l that also keeps i the smallest index.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == j || a(i, k) == a(j, k)) continue;
        for (std::size_t l = k + 1; l < n; ++l) {
          if (l == j) continue;
          const auto s = checkerboard_at(a, {i, j, k, l});
          if (s && *s == sign) visit(SymSwitchCoord{i, j, k, l});
        }
      }
    }
  }
}

}  // namespace

std::vector<SymSwitchCoord> find_sym_checkerboards(const Graph& g, Sign sign) {
  assert(g.degree_sorted());
  std::vector<SymSwitchCoord> out;
  for_each_sym_checkerboard(g, sign, [&](const SymSwitchCoord& c) { out.push_back(c); });
  return out;
}

std::size_t count_sym_checkerboards(const Graph& g, Sign sign) {
  std::size_t n = 0;
  for_each_sym_checkerboard(g, sign, [&](const SymSwitchCoord&) { ++n; });
  return n;
}

Graph apply_sym_switch(const Graph& g, const SymSwitchCoord& c, Sign direction) {
  Graph out = g;
  out.switch_in_place(c, direction);
  return out;
}

std::int64_t m2_switch_delta(const Graph& g, const SymSwitchCoord& c) noexcept {
  const auto d = g.degrees();
  return static_cast<std::int64_t>(d[c.i] - d[c.j]) * static_cast<std::int64_t>(d[c.k] - d[c.l]);
}

std::int64_t first_zagreb(const Graph& g) noexcept {
  std::int64_t total = 0;
  for (int d : g.degrees()) total += static_cast<std::int64_t>(d) * d;
  return total;
}

std::int64_t second_zagreb(const Graph& g) noexcept {
  const auto d = g.degrees();
  std::int64_t total = 0;
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) total += static_cast<std::int64_t>(d[u]) * d[v];
    }
  }
  return total;
}

Zagreb zagreb(const Graph& g) {
  if (g.m() == 0) throw DegenerateGraph("graph has no edges; Z2 is undefined");
  Zagreb z;
  z.M1 = first_zagreb(g);
  z.M2 = second_zagreb(g);
  z.Z1 = std::sqrt(static_cast<double>(z.M1) / static_cast<double>(g.n()));
  z.Z2 = std::sqrt(static_cast<double>(z.M2) / static_cast<double>(g.m()));
  return z;
}

std::optional<double> assortativity(const Graph& g) {
  if (g.m() == 0) throw DegenerateGraph("graph has no edges; assortativity is undefined");
  // With s2 = sum d^2 and s3 = sum d^3 the formula's halves clear into integers:
  //   r = (4 m M2 - s2^2) / (2 m s3 - s2^2).
  std::int64_t s2 = 0;
  std::int64_t s3 = 0;
  for (int d : g.degrees()) {
    s2 += static_cast<std::int64_t>(d) * d;
    s3 += static_cast<std::int64_t>(d) * d * d;
  }
  const auto m = static_cast<std::int64_t>(g.m());
  const std::int64_t num = 4 * m * second_zagreb(g) - s2 * s2;
  const std::int64_t den = 2 * m * s3 - s2 * s2;
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

PowerResult power_iteration(const Graph& g, const SpectralOptions& options) {
  const std::size_t n = g.n();
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) nbrs[u].push_back(v);
    }
  }
  auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t u = 0; u < n; ++u) {
      double s = 0.0;
      for (auto v : nbrs[u]) s += x[v];
      y[u] = s;
    }
  };
  auto normalise = [](std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    for (double& v : x) v /= s;
  };

  PowerResult res;
  std::vector<double> x(n, 1.0);
  normalise(x);
  std::vector<double> ax(n, 0.0);
  multiply(x, ax);
  double rq = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);

  // Convergence also requires a small residual: Rayleigh quotients can stall long before the
  // vector settles when the spectral gap is narrow.
  const double residual_tol = std::sqrt(options.tol) * 1e-2;
  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    for (std::size_t u = 0; u < n; ++u) x[u] += ax[u];
    normalise(x);
    multiply(x, ax);
    const double next = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    const double scale = std::max(1.0, std::abs(next));
    double residual = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      const double r = ax[u] - next * x[u];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    const bool settled = std::abs(next - rq) < options.tol * scale && residual < residual_tol * scale;
    rq = next;
    res.iterations = it;
    if (settled) {
      res.converged = true;
      break;
    }
  }
  res.lambda = rq;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack;
  if (n > 0) {
    seen[0] = 1;
    stack.push_back(0);
  }
  std::size_t reached = stack.size();
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (auto v : nbrs[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  res.support_proper = reached < n;
  res.vector = std::move(x);
  return res;
}

SpectralReport spectral_radius(const Graph& g, const SpectralOptions& options) {
  if (g.n() == 0) throw std::invalid_argument("graph has no vertices");
  const PowerResult pr = power_iteration(g, options);
  SpectralReport rep;
  rep.lambda1 = pr.lambda;
  rep.eigvec = pr.vector;
  rep.converged = pr.converged;
  rep.iterations = pr.iterations;
  rep.support_proper = pr.support_proper;
  rep.M1 = first_zagreb(g);
  rep.M2 = second_zagreb(g);
  rep.Z1 = std::sqrt(static_cast<double>(rep.M1) / static_cast<double>(g.n()));
  if (g.m() > 0) {
    rep.Z2 = std::sqrt(static_cast<double>(rep.M2) / static_cast<double>(g.m()));
    rep.r = assortativity(g);
  }
  return rep;
}

Graph gen_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("Erdos-Renyi graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0, 1]");
  Rng rng(seed);
  BinaryMatrix adj(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) {
        adj.set(u, v, true);
        adj.set(v, u, true);
      }
    }
  }
  return Graph(std::move(adj));
}

Graph gen_small_world(std::size_t side, double rewire_frac, std::uint64_t seed) {
  if (side == 0) throw std::invalid_argument("grid side must be positive");
  if (!(rewire_frac >= 0.0 && rewire_frac <= 1.0)) {
    throw std::invalid_argument("rewire fraction must be in [0, 1]");
  }
  const std::size_t n = side * side;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const std::size_t v = r * side + c;
      if (c + 1 < side) edges.emplace_back(v, v + 1);
      if (r + 1 < side) edges.emplace_back(v, v + side);
    }
  }
  BinaryMatrix adj(n, n);
  for (const auto& [u, v] : edges) {
    adj.set(u, v, true);
    adj.set(v, u, true);
  }

  const auto rewire = static_cast<std::size_t>(std::floor(rewire_frac * static_cast<double>(edges.size())));
  Rng rng(seed);
  // Partial Fisher-Yates picks `rewire` distinct edges in random order.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t t = 0; t < rewire; ++t) {
    const std::size_t pick = t + static_cast<std::size_t>(rng.below(order.size() - t));
    std::swap(order[t], order[pick]);
    auto [u, v] = edges[order[t]];
    if (rng.below(2) == 1) std::swap(u, v);
    std::vector<std::size_t> candidates;
    for (std::size_t w = 0; w < n; ++w) {
      if (w != u && !adj(u, w)) candidates.push_back(w);
    }
    if (candidates.empty()) continue;
    const std::size_t w = candidates[rng.below(candidates.size())];
    adj.set(u, v, false);
    adj.set(v, u, false);
    adj.set(u, w, true);
    adj.set(w, u, true);
  }
  return Graph(std::move(adj));
}

BinaryMatrix gen_split_zebra(const std::vector<int>& row_sums, const std::vector<int>& col_sums) {
  const std::size_t p = row_sums.size();
  const std::size_t q = col_sums.size();
  if (p == 0 || q == 0) throw InfeasibleMargins("margins must be non-empty");
  const long total_r = std::accumulate(row_sums.begin(), row_sums.end(), 0L);
  const long total_c = std::accumulate(col_sums.begin(), col_sums.end(), 0L);
  if (total_r != total_c) throw InfeasibleMargins("row and column sums differ in total");
  for (int r : row_sums) {
    if (r < 0 || static_cast<std::size_t>(r) > q) throw InfeasibleMargins("row sum out of range");
  }
  for (int c : col_sums) {
    if (c < 0 || static_cast<std::size_t>(c) > p) throw InfeasibleMargins("column sum out of range");
  }

  auto margins_match = [&](const BinaryMatrix& m) {
    return std::ranges::equal(m.row_sums(), row_sums) && std::ranges::equal(m.col_sums(), col_sums);
  };

  // Horizontal split at h: rows above are nested prefixes, rows below anti-nested suffixes.
  for (std::size_t h = 0; h <= p; ++h) {
    BinaryMatrix m(p, q);
    for (std::size_t r = 0; r < p; ++r) {
      const auto len = static_cast<std::size_t>(row_sums[r]);
      for (std::size_t t = 0; t < len; ++t) m.set(r, r < h ? t : q - 1 - t, true);
    }
    if (margins_match(m) && is_split_zebra_h(m)) return m;
  }
  // Vertical split at v: columns to the left nested, to the right anti-nested.
  for (std::size_t v = 0; v <= q; ++v) {
    BinaryMatrix m(p, q);
    for (std::size_t c = 0; c < q; ++c) {
      const auto len = static_cast<std::size_t>(col_sums[c]);
      for (std::size_t t = 0; t < len; ++t) m.set(c < v ? t : p - 1 - t, c, true);
    }
    if (margins_match(m) && is_split_zebra_v(m)) return m;
  }
  throw InfeasibleMargins("no split zebra has these margins");
}

}  // namespace switchgraph
