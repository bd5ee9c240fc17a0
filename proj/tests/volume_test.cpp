#include "gramvol/volume.hpp"

#include "gramvol/cohomology.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gramvol;

namespace {

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (mask & (1u << bit)) g.add_edge(i, j);
      ++bit;
    }
  return g;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (edge(rng)) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("finiteness of the named examples") {
  for (int p = 1; p <= 4; ++p) {
    auto v = decide_finiteness(crown(p));
    REQUIRE_FALSE(v.finite);
    REQUIRE(v.stable.has_value());
    CHECK(static_cast<int>(v.stable->inner.size()) == p);
    CHECK(static_cast<int>(v.stable->boundary.size()) == p);
    CHECK(verify_stable_certificate(crown(p).graph(), *v.stable));
    CHECK(verify_weight_certificate(crown(p).graph(), *v.weight));
  }

  CHECK(decide_finiteness(pentagon()).finite);
  for (int p = 2; p <= 4; ++p) CHECK(decide_finiteness(ideal_simplex(p)).finite);

  auto two_point = decide_finiteness(ideal_simplex(1));
  REQUIRE_FALSE(two_point.finite);
  CHECK(two_point.stable->inner == std::vector<int>{1});
  CHECK(two_point.stable->boundary == std::vector<int>{2});

  CHECK_FALSE(decide_finiteness(h22_nonideal_infinite()).finite);
}

TEST_CASE("certificate verifiers reject corrupted data") {
  Graph g = crown(2).graph();
  StableSetCertificate c{{1, 3}, {2, 4}};
  CHECK(verify_stable_certificate(g, c));
  CHECK_FALSE(verify_stable_certificate(g, {{1, 2}, {3, 4}}));  // not stable
  CHECK_FALSE(verify_stable_certificate(g, {{}, {}}));          // empty
  CHECK_FALSE(verify_stable_certificate(g, {{1}, {3}}));        // wrong boundary

  WeightCertificate w{{0, 1, -1, 1, -1}};
  CHECK(verify_weight_certificate(g, w));
  CHECK_FALSE(verify_weight_certificate(g, {{0, 1, 1, 0, 0}}));   // edge violated
  CHECK_FALSE(verify_weight_certificate(g, {{0, 0, 0, 0, 0}}));   // zero
  CHECK_FALSE(verify_weight_certificate(g, {{0, 1, -1, -1, -1}}));  // sum < 0
  CHECK_FALSE(verify_weight_certificate(g, {{0, 2, -2, 0, 0}}));  // range
}

TEST_CASE("weight oracle examples") {
  CHECK(brute_force_weight_oracle(pentagon()).finite);
  auto cr = brute_force_weight_oracle(crown(2));
  REQUIRE_FALSE(cr.finite);
  CHECK(verify_weight_certificate(crown(2).graph(), *cr.weight));
  CHECK(verify_stable_certificate(crown(2).graph(), *cr.stable));

  Graph all_loops(3, {Edge(1, 1), Edge(2, 2), Edge(3, 3)});
  CHECK(brute_force_weight_oracle(all_loops).finite);
  CHECK(finiteness_verdict(all_loops).finite);
  CHECK(cone_slice_bounded(all_loops));
}

TEST_CASE("cone slice examples") {
  CHECK(cone_slice_bounded(pentagon()));
  CHECK_FALSE(cone_slice_bounded(crown(1)));
  // A single unlooped vertex: the point itself spans a lineality line.
  CHECK_FALSE(cone_slice_bounded(Graph(1)));
  CHECK(cone_slice_bounded(Graph(1, {Edge(1, 1)})));
}

TEST_CASE("the three deciders agree on all small graphs") {
  for (int n = 1; n <= 4; ++n) {
    const int slots = n * (n + 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      Graph g = graph_from_mask(n, mask);
      const bool fin = finiteness_verdict(g).finite;
      REQUIRE(brute_force_weight_oracle(g).finite == fin);
      REQUIRE(cone_slice_bounded(g) == fin);
    }
  }
  std::mt19937 rng(13);
  for (int rep = 0; rep < 25; ++rep) {
    Graph g = random_graph(rng, 6 + rep % 4, 0.35);
    const bool fin = finiteness_verdict(g).finite;
    CHECK(brute_force_weight_oracle(g).finite == fin);
    CHECK(cone_slice_bounded(g) == fin);
  }
}

TEST_CASE("verdicts depend only on the graph") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  int done = 0;
  for (int rep = 0; rep < 200 && done < 25; ++rep) {
    Graph g = random_graph(rng, 3 + rep % 5, 0.5);
    if (g.edge_count() == 0) continue;
    auto draw = [&] {
      std::vector<Rational> vals(g.edge_count());
      for (auto& v : vals) v = Rational(num(rng), den(rng));
      return Cochain1Q(g, vals);
    };
    auto a = realize_from_cochain(draw());
    auto b = realize_from_cochain(draw());
    if (!a || !b) continue;
    ++done;
    CHECK(decide_finiteness(*a).finite == decide_finiteness(*b).finite);
  }
  CHECK(done >= 15);
}

TEST_CASE("capacity guards") {
  CHECK_THROWS_AS(finiteness_verdict(Graph(31)), capacity_error);
  CHECK_THROWS_AS(brute_force_weight_oracle(Graph(15)), capacity_error);
}

TEST_CASE("estimator argument validation") {
  CHECK_THROWS_AS(mc_volume_estimate(pentagon(), 8.0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_volume_estimate(pentagon(), 0.0, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_exponential_estimate(Graph(2), -1.0, 8.0, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("delta region with no constraints fills the box") {
  Graph g(3);
  auto est = delta_region_estimate(g, 2.0, 10000, 42);
  CHECK(est.estimate == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("estimates are deterministic and partition-independent") {
  auto a = mc_volume_estimate(pentagon(), 8.0, 200000, 7, 1);
  auto b = mc_volume_estimate(pentagon(), 8.0, 200000, 7, 1);
  auto c = mc_volume_estimate(pentagon(), 8.0, 200000, 7, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.estimate == c.estimate);
  CHECK(a.std_error == c.std_error);

  auto d1 = delta_exponential_estimate(crown(2).graph(), 10.0, 8.0, 200000, 7, 1);
  auto d2 = delta_exponential_estimate(crown(2).graph(), 10.0, 8.0, 200000, 7, 3);
  CHECK(d1.estimate == d2.estimate);
}

TEST_CASE("truncated estimates grow with the radius up to noise") {
  const std::uint64_t N = 200000;
  auto small = mc_volume_estimate(crown(2), 2.0, N, 11);
  auto large = mc_volume_estimate(crown(2), 4.0, N, 11);
  CHECK(large.estimate + 3 * (large.std_error + small.std_error) >= small.estimate);
}

TEST_CASE("exponential-coordinate estimator matches closed forms") {
  // No edges: integral of e^{p1+...+pn} over the box alone.
  Graph free3(3);
  const double lower = 4.0, radius = 4.0;
  auto est = delta_exponential_estimate(free3, lower, radius, 400000, 5);
  const double oned = radius - std::exp(-lower);
  const double expect = oned * oned * oned;
  CHECK(std::abs(est.estimate - expect) <= 5 * est.std_error);

  // One edge: 2D slice under p1 + p2 <= 0 computed by quadrature.
  Graph pair(2, {Edge(1, 2)});
  auto est2 = delta_exponential_estimate(pair, lower, radius, 600000, 5);
  const double hi = std::log(radius);
  const int grid = 2000;
  const double step = (hi + lower) / grid;
  double quad = 0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double p1 = -lower + (i + 0.5) * step;
      const double p2 = -lower + (j + 0.5) * step;
      if (p1 + p2 <= 0) quad += std::exp(p1 + p2) * step * step;
    }
  CHECK(std::abs(est2.estimate - quad) <= 5 * est2.std_error);
}

TEST_CASE("the f-region is sandwiched between scaled delta regions") {
  // With c = -gram >= 0 on edges, C1 = min, C2 = max and m = |A|:
  // C1 g <= f <= 2 m C2 g pointwise, so
  //   lam * Delta subset {f <= 1} subset mu * Delta,
  // lam = (2 m C2)^{-1/2}, mu = C1^{-1/2}, and scaling by s maps box
  // (0, R/s] onto (0, R]. Checked statistically at matched seeds.
  for (const MarkedSimplex& s : {pentagon(), crown(2)}) {
    const int n = s.n();
    const Graph g = s.graph();
    Rational c1, c2;
    bool first = true;
    for (const Edge& e : g.edges()) {
      const Rational c = -s.gram().at(e.u, e.v);
      if (first || c < c1) c1 = c;
      if (first || c > c2) c2 = c;
      first = false;
    }
    const double lam = 1.0 / std::sqrt(2.0 * g.edge_count() * to_double(c2));
    const double mu = 1.0 / std::sqrt(to_double(c1));
    const double radius = 4.0;
    const std::uint64_t N = 400000;
    // Compare pure region volumes: strip the n|det alpha| factor.
    const double scale =
        n * std::sqrt(std::abs(to_double(determinant(s.gram()))));
    auto f_est = mc_volume_estimate(s, radius, N, 99);
    const double f_vol = f_est.estimate / scale;
    const double f_err = f_est.std_error / scale;

    auto lower = delta_region_estimate(g, radius / lam, N, 99);
    const double lower_vol = std::pow(lam, n) * lower.estimate;
    const double lower_err = std::pow(lam, n) * lower.std_error;
    auto upper = delta_region_estimate(g, radius / mu, N, 99);
    const double upper_vol = std::pow(mu, n) * upper.estimate;
    const double upper_err = std::pow(mu, n) * upper.std_error;

    CHECK(lower_vol <= f_vol + 4 * (lower_err + f_err));
    CHECK(f_vol <= upper_vol + 4 * (upper_err + f_err));
  }
}

TEST_CASE("delta finiteness mirrors the combinatorial verdict statistically") {
  // Pentagon: delta volumes stabilise; crown: they keep growing.
  const std::uint64_t N = 300000;
  auto p1 = delta_region_estimate(pentagon(), 4.0, N, 3);
  auto p2 = delta_region_estimate(pentagon(), 8.0, N, 3);
  CHECK(std::abs(p2.estimate - p1.estimate) <=
        6 * (p1.std_error + p2.std_error) + 0.35);

  auto c1 = delta_region_estimate(crown(2), 2.0, N, 3);
  auto c2 = delta_region_estimate(crown(2), 4.0, N, 3);
  CHECK(c2.estimate - c1.estimate > 3 * (c1.std_error + c2.std_error));
}
