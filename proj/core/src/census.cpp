#include "gramvol/census.hpp"

#include "gramvol/cohomology.hpp"
#include "gramvol/rng.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gramvol {

int Permutation::parity() const {
  const int size = n();
  std::vector<bool> seen(size + 1, false);
  int cycles = 0;
  for (int k = 1; k <= size; ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (int v = k; !seen[v]; v = image[v]) seen[v] = true;
  }
  return (size - cycles) % 2 == 0 ? 1 : -1;
}

int CycleType::n() const { return std::accumulate(lengths.begin(), lengths.end(), 0); }

CycleType cycle_type(const Permutation& sigma) {
  const int size = sigma.n();
  std::vector<bool> seen(size + 1, false);
  CycleType ct;
  for (int k = 1; k <= size; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int v = k; !seen[v]; v = sigma.image[v]) {
      seen[v] = true;
      ++len;
    }
    ct.lengths.push_back(len);
  }
  std::sort(ct.lengths.rbegin(), ct.lengths.rend());
  return ct;
}

namespace {

bool adjacency_dfs(const Graph& g, int k, std::vector<int>& image, std::vector<bool>& used,
                   std::optional<int> parity) {
  const int n = g.vertex_count();
  if (k > n) {
    if (!parity) return true;
    Permutation sigma{image};
    return sigma.parity() == *parity;
  }
  for (int w : g.neighbors(k)) {
    if (used[w]) continue;
    used[w] = true;
    image[k] = w;
    if (adjacency_dfs(g, k + 1, image, used, parity)) return true;
    used[w] = false;
  }
  image[k] = 0;
  return false;
}

}  // namespace

std::optional<Permutation> adjacency_permutation(const Graph& g,
                                                 std::optional<int> required_parity) {
  const int n = g.vertex_count();
  if (n > 10) throw capacity_error("adjacency_permutation is guarded at 10 vertices");
  if (required_parity && *required_parity != 1 && *required_parity != -1)
    throw std::invalid_argument("parity must be +1 or -1");
  std::vector<int> image(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  if (!adjacency_dfs(g, 1, image, used, required_parity)) return std::nullopt;
  return Permutation{std::move(image)};
}

Signature signature_from_cycle_type(const CycleType& ct) {
  const int n = ct.n();
  int twice_p = n;
  for (int k : ct.lengths) {
    if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
    if (k == 1)
      twice_p -= 1;  // a fixed point carries (0, 1)
    else if (k % 4 == 1)
      twice_p -= 1;
    else if (k % 4 == 3)
      twice_p += 1;
  }
  const int p = twice_p / 2;
  return Signature{p, n - p, 0};
}

namespace {

RationalSymMatrix cycle_rep_matrix(int n, bool nonzero_class) {
  if (n == 1) {
    RationalSymMatrix m(1);
    m.set(1, 1, -1);
    return m;
  }
  if (n == 2) {
    RationalSymMatrix m(2);
    m.set(1, 2, -1);
    return m;
  }
  std::vector<Rational> w(n, Rational(-1));
  if (nonzero_class) w[0] = -2;
  return cycle_matrix(w);
}

}  // namespace

CycleClassTable cycle_class_table(int n) {
  if (n < 1) throw std::invalid_argument("cycle length must be positive");
  CycleClassTable t;
  t.n = n;
  t.h1_dim = h1_dimension(Graph::cycle(n), Coefficients::Reals);

  const int expected_dim = (n >= 3 && n % 2 == 0) ? 1 : 0;
  if (t.h1_dim != expected_dim) throw std::logic_error("cycle cohomology dimension mismatch");

  switch (n % 4) {
    case 0:
      t.strata = {{"nonzero", Signature{n / 2, n / 2, 0}},
                  {"zero", Signature{n / 2 - 1, n / 2 - 1, 2}}};
      break;
    case 1:
      t.strata = {{"all", Signature{(n - 1) / 2, (n + 1) / 2, 0}}};
      break;
    case 2:
      t.strata = {{"all", Signature{n / 2, n / 2, 0}}};
      break;
    case 3:
      t.strata = {{"all", Signature{(n + 1) / 2, (n - 1) / 2, 0}}};
      break;
  }

  // Verify every stratum against an exact representative.
  auto check = [n](bool nonzero_class, const Signature& want) {
    if (signature(cycle_rep_matrix(n, nonzero_class)) != want)
      throw std::logic_error("cycle stratum signature mismatch");
  };
  if (n % 4 == 0) {
    check(true, t.strata[0].sig);
    check(false, t.strata[1].sig);
  } else {
    check(false, t.strata[0].sig);
    if (n >= 3 && n % 4 == 2) check(true, t.strata[0].sig);
  }
  return t;
}

PerturbationResult perturbation_realize(const Graph& g, const Permutation& sigma,
                                        const Rational& epsilon) {
  const int n = g.vertex_count();
  if (sigma.n() != n) throw std::invalid_argument("permutation size mismatch");
  for (int k = 1; k <= n; ++k)
    if (!g.has_edge(k, sigma.of(k)))
      throw std::invalid_argument("not an adjacency permutation of the graph");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");

  std::vector<Rational> values(g.edge_count(), epsilon);
  std::vector<bool> seen(n + 1, false);
  for (int k = 1; k <= n; ++k) {
    if (seen[k]) continue;
    std::vector<int> cycle;
    for (int v = k; !seen[v]; v = sigma.of(v)) {
      seen[v] = true;
      cycle.push_back(v);
    }
    const int m = static_cast<int>(cycle.size());
    for (int v : cycle) values[g.edge_index(v, sigma.of(v))] = 1;
    // A 0 mod 4 cycle needs the nonzero-class representative to stay
    // invertible; bump one designated edge.
    if (m % 4 == 0) values[g.edge_index(cycle[0], sigma.of(cycle[0]))] = 2;
  }

  Cochain1Q f(g, values);
  PerturbationResult out;
  out.expected = signature_from_cycle_type(cycle_type(sigma));
  RationalSymMatrix mat(n);
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge e = g.edges()[k];
    mat.set(e.u, e.v, -values[k]);
  }
  out.realized = signature(mat);
  out.simplex = realize_from_cochain(f);
  out.matches = out.simplex.has_value() && out.realized == out.expected;
  return out;
}

Graph graph_from_encoding(int n, bool loopless, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = loopless ? i + 1 : i; j <= n; ++j) {
      if (mask & (std::uint64_t{1} << bit)) g.add_edge(i, j);
      ++bit;
    }
  return g;
}

std::uint64_t graph_encoding(const Graph& g, bool loopless) {
  const int n = g.vertex_count();
  std::uint64_t mask = 0;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = loopless ? i + 1 : i; j <= n; ++j) {
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
      ++bit;
    }
  return mask;
}

H22CensusReport h22_ideal_census() {
  H22CensusReport report;
  report.total = 1 << 10;
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    Graph g = graph_from_encoding(5, true, mask);
    auto sigma = adjacency_permutation(g, 1);
    if (!sigma) continue;
    // Loopless, so sigma is fixed-point-free; with parity +1 on five
    // points it must be a 5-cycle.
    ++report.five_cycle_count;
    if (!finiteness_verdict(g).finite) report.counterexamples.push_back(mask);
  }
  return report;
}

namespace {

const Rational kSampleValues[5] = {Rational(1), Rational(1, 2), Rational(2), Rational(1, 3),
                                   Rational(3)};

CensusRow make_census_row(int n, bool loopless, std::uint64_t mask) {
  CensusRow row;
  row.encoding = mask;
  row.graph = graph_from_encoding(n, loopless, mask);
  const Graph& g = row.graph;

  row.perm_even_exists = adjacency_permutation(g, 1).has_value();
  row.perm_odd_exists = adjacency_permutation(g, -1).has_value();

  // Cycle types of all adjacency permutations -> predicted signatures.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) ok = g.has_edge(k, perm[k - 1]);
    if (!ok) continue;
    std::vector<int> image(n + 1, 0);
    for (int k = 1; k <= n; ++k) image[k] = perm[k - 1];
    row.predicted.push_back(signature_from_cycle_type(cycle_type(Permutation{image})));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(row.predicted.begin(), row.predicted.end());
  row.predicted.erase(std::unique(row.predicted.begin(), row.predicted.end()),
                      row.predicted.end());

  // Sampled cochains; the stream is keyed by the graph encoding so rows do
  // not depend on processing order.
  const CounterRng rng{0xC3A5u ^ (mask * 0x100000001B3ULL)};
  const int edges = g.edge_count();
  for (int s = 0; s < 50; ++s) {
    std::vector<Rational> vals(edges);
    for (int k = 0; k < edges; ++k)
      vals[k] = kSampleValues[rng.below(static_cast<std::uint64_t>(s) * edges + k, 5)];
    RationalSymMatrix mat(n);
    for (int k = 0; k < edges; ++k) {
      const Edge e = g.edges()[k];
      mat.set(e.u, e.v, -vals[k]);
    }
    row.realized.push_back(signature(mat));
  }
  std::sort(row.realized.begin(), row.realized.end());
  row.realized.erase(std::unique(row.realized.begin(), row.realized.end()),
                     row.realized.end());

  row.verdict = finiteness_verdict(g);
  return row;
}

}  // namespace

std::vector<CensusRow> run_census(int n, bool loopless, int threads) {
  if (n < 1) throw std::invalid_argument("census needs n >= 1");
  if (loopless ? n > 6 : n > 5)
    throw capacity_error("census guarded at n = 5 with loops, n = 6 loopless");
  const int slots = loopless ? n * (n - 1) / 2 : n * (n + 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << slots;

  std::vector<CensusRow> rows(total);
  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::uint64_t mask = 0; mask < total; ++mask)
      rows[mask] = make_census_row(n, loopless, mask);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t mask = next.fetch_add(1);
        if (mask >= total) return;
        rows[mask] = make_census_row(n, loopless, mask);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

bool isometric_unmarked(const MarkedSimplex& a, const MarkedSimplex& b) {
  if (a.n() != b.n()) return false;
  const int n = a.n();
  if (n > 7) throw capacity_error("unmarked isometry is guarded at 7 vertices");
  const Graph ga = a.graph();
  const Graph gb = b.graph();
  if (ga.edge_count() != gb.edge_count()) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool iso = true;
    for (int i = 1; i <= n && iso; ++i)
      for (int j = i; j <= n && iso; ++j)
        if (ga.has_edge(i, j) != gb.has_edge(perm[i - 1], perm[j - 1])) iso = false;
    if (!iso) continue;
    RationalSymMatrix relabelled(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        relabelled.set(i, j, b.gram().at(perm[i - 1], perm[j - 1]));
    MarkedSimplex bp(relabelled, b.p(), b.q());
    if (isometric(a, bp).isometric) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

Rational bilinear(const std::vector<Rational>& x, const std::vector<Rational>& y, int pos) {
  Rational acc(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (static_cast<int>(k) < pos)
      acc += x[k] * y[k];
    else
      acc -= x[k] * y[k];
  }
  return acc;
}

}  // namespace

MarkedSimplex ideal_infinite_example(int p, int q, std::uint64_t seed) {
  if (p < 3 || q < 1)
    throw std::invalid_argument("ideal infinite examples need p >= 3, q >= 1");
  const int pos = p - 1, dim = (p - 1) + q;
  const int count = p + q - 1;  // vertices of the H^{p-1,q-1} factor

  const CounterRng rng{seed};
  std::uint64_t counter = 0;
  auto draw = [&]() { return static_cast<int>(rng.below(counter++, 7)) - 3; };

  // e is a fixed isotropic direction used to project random integer
  // vectors onto the isotropic cone.
  std::vector<Rational> e(dim, Rational(0));
  e[0] = 1;
  e[pos] = 1;

  constexpr int kMaxAttempts = 200000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::vector<Rational>> x;
    bool bad = false;
    for (int i = 0; i < count && !bad; ++i) {
      std::vector<Rational> y(dim);
      for (int k = 0; k < dim; ++k) y[k] = draw();
      const Rational be = bilinear(y, e, pos);
      if (be == 0) {
        bad = true;
        break;
      }
      const Rational s = -bilinear(y, y, pos) / (2 * be);
      for (int k = 0; k < dim; ++k) y[k] += s * e[k];
      bool zero = true;
      for (const Rational& v : y) zero &= v == 0;
      if (zero) {
        bad = true;
        break;
      }
      x.push_back(std::move(y));
    }
    if (bad) continue;

    RationalSymMatrix gram(count);
    for (int i = 1; i <= count && !bad; ++i)
      for (int j = i + 1; j <= count && !bad; ++j) {
        const Rational v = bilinear(x[i - 1], x[j - 1], pos);
        if (v == 0) bad = true;
        gram.set(i, j, v);
      }
    if (bad) continue;

    // Flip lift signs to make every product negative, when consistent.
    auto signs = is_sign_coboundary(restrict_sign_part(gram_cocycle(MarkedPointSet(gram))));
    if (!signs.is_coboundary) continue;
    std::vector<int> eps(count + 1, 1);
    for (int v = 1; v <= count; ++v) eps[v] = (*signs.witness)[v] ? -1 : 1;
    RationalSymMatrix fixed = rescale_by_signs(gram, eps);
    if (signature(fixed) != Signature{p - 1, q, 0}) continue;

    return product(crown(1), MarkedSimplex(std::move(fixed), p - 1, q - 1));
  }
  throw std::runtime_error("ideal infinite example: rejection sampling exhausted");
}

}  // namespace gramvol
