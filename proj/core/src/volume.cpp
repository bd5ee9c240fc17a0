#include "gramvol/volume.hpp"

#include "gramvol/cohomology.hpp"
#include "gramvol/lp.hpp"
#include "gramvol/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace gramvol {

namespace {

std::vector<int> boundary_of(const Graph& g, const std::vector<int>& inner) {
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (int v : inner) in[v] = true;
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (in[v]) continue;
    for (int w : g.neighbors(v))
      if (in[w]) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

WeightCertificate weights_from_stable_set(const Graph& g, const StableSetCertificate& c) {
  WeightCertificate w;
  w.weights.assign(g.vertex_count() + 1, 0);
  for (int v : c.inner) w.weights[v] = 1;
  for (int v : c.boundary) w.weights[v] = -1;
  return w;
}

struct StableSearch {
  const Graph& g;
  std::vector<int> candidates;      // loop-free vertices, increasing
  std::vector<bool> in_inner;       // 1-based
  std::vector<bool> in_boundary;    // 1-based
  std::vector<int> inner;
  int boundary_size = 0;
  std::vector<int> best;

  explicit StableSearch(const Graph& graph) : g(graph) {
    in_inner.assign(g.vertex_count() + 1, false);
    in_boundary.assign(g.vertex_count() + 1, false);
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (!g.has_loop(v)) candidates.push_back(v);
  }

  void run() { dfs(0); }

  void dfs(std::size_t from) {
    if (!inner.empty() && static_cast<int>(inner.size()) >= boundary_size &&
        inner.size() > best.size())
      best = inner;
    for (std::size_t idx = from; idx < candidates.size(); ++idx) {
      const int remaining = static_cast<int>(candidates.size() - idx);
      const int size = static_cast<int>(inner.size());
      // Even taking every remaining candidate cannot beat the incumbent
      // or catch up with the boundary.
      if (size + remaining <= static_cast<int>(best.size())) return;
      if (size + remaining < boundary_size) return;
      const int v = candidates[idx];
      if (in_boundary[v]) continue;
      bool adjacent = false;
      for (int w : g.neighbors(v))
        if (in_inner[w]) {
          adjacent = true;
          break;
        }
      if (adjacent) continue;

      std::vector<int> added;
      for (int w : g.neighbors(v)) {
        if (w == v || in_inner[w] || in_boundary[w]) continue;
        in_boundary[w] = true;
        added.push_back(w);
      }
      in_inner[v] = true;
      inner.push_back(v);
      boundary_size += static_cast<int>(added.size());

      dfs(idx + 1);

      boundary_size -= static_cast<int>(added.size());
      inner.pop_back();
      in_inner[v] = false;
      for (int w : added) in_boundary[w] = false;
    }
  }
};

}  // namespace

VolumeVerdict finiteness_verdict(const Graph& g) {
  if (g.vertex_count() > 30)
    throw capacity_error("finiteness_verdict is guarded at 30 vertices");
  StableSearch search(g);
  search.run();
  VolumeVerdict verdict;
  if (search.best.empty()) return verdict;
  verdict.finite = false;
  StableSetCertificate cert;
  cert.inner = search.best;
  cert.boundary = boundary_of(g, cert.inner);
  verdict.weight = weights_from_stable_set(g, cert);
  verdict.stable = std::move(cert);
  return verdict;
}

VolumeVerdict decide_finiteness(const MarkedSimplex& s) {
  return finiteness_verdict(s.graph());
}

VolumeVerdict brute_force_weight_oracle(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) throw capacity_error("weight oracle is guarded at 14 vertices (3^n states)");
  std::vector<int> p(n + 1, -1);
  VolumeVerdict verdict;
  for (;;) {
    // advance the {-1,0,1} odometer
    int k = n;
    while (k >= 1 && p[k] == 1) p[k--] = -1;
    if (k < 1) break;
    ++p[k];

    bool nonzero = false;
    int sum = 0;
    for (int v = 1; v <= n; ++v) {
      nonzero |= p[v] != 0;
      sum += p[v];
    }
    if (!nonzero || sum < 0) continue;
    bool in_cone = true;
    for (const Edge& e : g.edges())
      if (p[e.u] + p[e.v] > 0) {
        in_cone = false;
        break;
      }
    if (!in_cone) continue;

    verdict.finite = false;
    WeightCertificate w;
    w.weights = p;
    StableSetCertificate cert;
    for (int v = 1; v <= n; ++v)
      if (p[v] == 1) cert.inner.push_back(v);
    cert.boundary = boundary_of(g, cert.inner);
    verdict.stable = std::move(cert);
    verdict.weight = std::move(w);
    return verdict;
  }
  return verdict;
}

VolumeVerdict brute_force_weight_oracle(const MarkedSimplex& s) {
  return brute_force_weight_oracle(s.graph());
}

bool cone_slice_bounded(const Graph& g) {
  const int n = g.vertex_count();

  // Lineality directions of P are the 0-cocycle kernel: +-c alternating on
  // a bipartite component. Either sign orientation has sum >= 0, so any
  // lineality at all makes the slice cross-section unbounded.
  if (h0_dimension(g, Coefficients::Reals) > 0) return false;

  // Pointed cone: a qualifying nonzero p, scaled so its largest coordinate
  // is 1, is feasible for one of these systems. Shift q = p + (n-1) >= 0.
  const Rational shift(n - 1);
  for (int k = 1; k <= n; ++k) {
    LpProblem lp(n);
    for (const Edge& e : g.edges()) {
      std::vector<Rational> row(n, Rational(0));
      row[e.u - 1] += 1;
      row[e.v - 1] += 1;
      lp.add_le(std::move(row), 2 * shift);
    }
    {
      std::vector<Rational> row(n, Rational(-1));
      lp.add_le(std::move(row), Rational(-n) * shift);  // sum(p) >= 0
    }
    for (int j = 1; j <= n; ++j) {
      std::vector<Rational> row(n, Rational(0));
      row[j - 1] = 1;
      lp.add_le(std::move(row), shift + 1);  // p_j <= 1
    }
    {
      std::vector<Rational> row(n, Rational(0));
      row[k - 1] = 1;
      lp.add_ge(std::move(row), shift + 1);  // p_k >= 1, so p_k = 1
    }
    if (lp_feasible(lp)) return false;
  }
  return true;
}

bool cone_slice_bounded(const MarkedSimplex& s) { return cone_slice_bounded(s.graph()); }

bool verify_stable_certificate(const Graph& g, const StableSetCertificate& c) {
  if (c.inner.empty()) return false;
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (int v : c.inner) {
    if (v < 1 || v > g.vertex_count() || in[v]) return false;
    in[v] = true;
  }
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) return false;  // covers loops on members too
  auto boundary = boundary_of(g, c.inner);
  if (boundary != c.boundary) return false;
  return c.inner.size() >= boundary.size();
}

bool verify_weight_certificate(const Graph& g, const WeightCertificate& c) {
  if (c.weights.size() != static_cast<std::size_t>(g.vertex_count()) + 1) return false;
  bool nonzero = false;
  long long sum = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const int w = c.weights[v];
    if (w < -1 || w > 1) return false;
    nonzero |= w != 0;
    sum += w;
  }
  if (!nonzero || sum < 0) return false;
  for (const Edge& e : g.edges())
    if (c.weights[e.u] + c.weights[e.v] > 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kBlockSize = 1 << 16;

// Runs fn(block_index) over ceil(total/kBlockSize) blocks on the given
// number of workers. Work stealing by atomic counter; the caller is
// responsible for combining per-block results in block order when the
// reduction is order-sensitive.
void run_blocks(std::uint64_t blocks, int threads, const std::function<void(std::uint64_t)>& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || blocks <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      fn(b);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

struct IndicatorAccumulator {
  std::vector<std::uint64_t> block_hits;
};

void validate_mc_args(double radius, std::uint64_t samples) {
  if (!(radius > 0)) throw std::invalid_argument("truncation radius must be positive");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
}

VolumeEstimate indicator_mc(int n, double radius, std::uint64_t samples,
                            std::uint64_t seed, int threads, double scale,
                            const std::function<bool(const double*)>& inside) {
  const CounterRng rng{seed};
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<std::uint64_t> hits(blocks, 0);
  run_blocks(blocks, threads, [&](std::uint64_t b) {
    std::vector<double> t(n);
    std::uint64_t h = 0;
    const std::uint64_t lo = b * kBlockSize;
    const std::uint64_t hi = std::min(samples, lo + kBlockSize);
    for (std::uint64_t m = lo; m < hi; ++m) {
      for (int j = 0; j < n; ++j)
        t[j] = radius * (1.0 - rng.uniform01(m * n + j));  // (0, R]
      if (inside(t.data())) ++h;
    }
    hits[b] = h;
  });
  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;

  const double box = std::pow(radius, n);
  const double rate = static_cast<double>(total) / static_cast<double>(samples);
  const double adjusted = (static_cast<double>(total) + 0.5) / (static_cast<double>(samples) + 1.0);
  VolumeEstimate est;
  est.truncation_radius = radius;
  est.samples = samples;
  est.seed = seed;
  est.estimate = scale * box * rate;
  est.std_error = scale * box *
                  std::sqrt(adjusted * (1.0 - adjusted) / static_cast<double>(samples));
  return est;
}

}  // namespace

VolumeEstimate mc_volume_estimate(const MarkedSimplex& s, double truncation_radius,
                                  std::uint64_t samples, std::uint64_t seed, int threads) {
  validate_mc_args(truncation_radius, samples);
  const int n = s.n();
  // f(t) = -t^T G t as a sum over edges; entries of -G are nonnegative.
  struct Term {
    int i, j;
    double c;
  };
  std::vector<Term> terms;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Rational& v = s.gram().at(i, j);
      if (v == 0) continue;
      terms.push_back({i - 1, j - 1, (i == j ? -1.0 : -2.0) * to_double(v)});
    }
  const double det = std::abs(to_double(determinant(s.gram())));
  const double scale = static_cast<double>(n) * std::sqrt(det);
  return indicator_mc(n, truncation_radius, samples, seed, threads, scale,
                      [&terms](const double* t) {
                        double f = 0;
                        for (const Term& term : terms) f += term.c * t[term.i] * t[term.j];
                        return f <= 1.0;
                      });
}

VolumeEstimate delta_region_estimate(const Graph& g, double truncation_radius,
                                     std::uint64_t samples, std::uint64_t seed, int threads) {
  validate_mc_args(truncation_radius, samples);
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u - 1, e.v - 1);
  return indicator_mc(n, truncation_radius, samples, seed, threads, 1.0,
                      [&pairs](const double* t) {
                        for (const auto& [i, j] : pairs)
                          if (t[i] * t[j] > 1.0) return false;
                        return true;
                      });
}

VolumeEstimate delta_region_estimate(const MarkedSimplex& s, double truncation_radius,
                                     std::uint64_t samples, std::uint64_t seed, int threads) {
  return delta_region_estimate(s.graph(), truncation_radius, samples, seed, threads);
}

VolumeEstimate delta_exponential_estimate(const Graph& g, double lower,
                                          double truncation_radius, std::uint64_t samples,
                                          std::uint64_t seed, int threads) {
  validate_mc_args(truncation_radius, samples);
  if (!(lower > 0)) throw std::invalid_argument("lower box extent must be positive");
  const int n = g.vertex_count();
  const double hi = std::log(truncation_radius);
  const double width = hi + lower;
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u - 1, e.v - 1);

  const CounterRng rng{seed};
  const std::uint64_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<double> sums(blocks, 0.0), sqsums(blocks, 0.0);
  run_blocks(blocks, threads, [&](std::uint64_t b) {
    std::vector<double> p(n);
    double sum = 0, sq = 0;
    const std::uint64_t lo = b * kBlockSize;
    const std::uint64_t end = std::min(samples, lo + kBlockSize);
    for (std::uint64_t m = lo; m < end; ++m) {
      for (int j = 0; j < n; ++j) p[j] = -lower + width * rng.uniform01(m * n + j);
      bool in_cone = true;
      for (const auto& [i, j] : pairs)
        if (p[i] + p[j] > 0) {
          in_cone = false;
          break;
        }
      if (!in_cone) continue;
      double sigma = 0;
      for (int j = 0; j < n; ++j) sigma += p[j];
      const double w = std::exp(sigma);
      sum += w;
      sq += w * w;
    }
    sums[b] = sum;
    sqsums[b] = sq;
  });
  // Combine in block order so the result is independent of scheduling.
  double sum = 0, sq = 0;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    sum += sums[b];
    sq += sqsums[b];
  }
  const double box = std::pow(width, n);
  const double mean = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sq / static_cast<double>(samples) - mean * mean);
  VolumeEstimate est;
  est.truncation_radius = truncation_radius;
  est.samples = samples;
  est.seed = seed;
  est.estimate = box * mean;
  est.std_error = box * std::sqrt(var / static_cast<double>(samples));
  return est;
}

}  // namespace gramvol
