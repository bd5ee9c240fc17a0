#include "gramvol/simplex.hpp"

#include <doctest.h>

#include <random>

using namespace gramvol;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

RationalSymMatrix pentagon_gram() {
  RationalSymMatrix g(5);
  for (int k = 1; k <= 5; ++k) g.set(k, k % 5 + 1, -1);
  return g;
}

bool all_entries_nonpositive(const RationalSymMatrix& m) {
  for (int i = 1; i <= m.size(); ++i)
    for (int j = i; j <= m.size(); ++j)
      if (m.at(i, j) > 0) return false;
  return true;
}

// Brute-force existence of a sign vector making every rescaled entry <= 0.
bool brute_force_lift(const RationalSymMatrix& m) {
  const int n = m.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> eps(n + 1, 1);
    for (int v = 1; v <= n; ++v)
      if (mask & (1 << (v - 1))) eps[v] = -1;
    if (all_entries_nonpositive(rescale_by_signs(m, eps))) return true;
  }
  return false;
}

std::vector<Rational> random_positive_gauge(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  std::vector<Rational> g(n + 1, Rational(1));
  for (int v = 1; v <= n; ++v) g[v] = Rational(num(rng), den(rng));
  return g;
}

}  // namespace

TEST_CASE("gram graphs") {
  CHECK(gram_graph(MarkedPointSet(pentagon_gram())) == Graph::cycle(5));

  RationalSymMatrix two_points(2);
  two_points.set(1, 1, -1);
  two_points.set(2, 2, -1);
  CHECK(gram_graph(MarkedPointSet(two_points)) == Graph(2, {Edge(1, 1), Edge(2, 2)}));

  CHECK(crown(2).graph() == Graph(4, {Edge(1, 2), Edge(3, 4)}));
}

TEST_CASE("ideal point sets") {
  CHECK(is_ideal(MarkedPointSet(pentagon_gram())));
  CHECK(is_ideal(MarkedPointSet(RationalSymMatrix(3))));

  RationalSymMatrix m(2);
  m.set(1, 1, -1);
  CHECK_FALSE(is_ideal(MarkedPointSet(m)));
}

TEST_CASE("positive lifts: examples") {
  // Negating one pentagon vertex is undone by the sign search.
  RationalSymMatrix flipped = rescale_by_signs(pentagon_gram(), {1, -1, 1, 1, 1, 1});
  auto eps = find_positive_lift(MarkedPointSet(flipped));
  REQUIRE(eps.has_value());
  CHECK(all_entries_nonpositive(rescale_by_signs(flipped, *eps)));

  // C4 with an odd number of positive entries around the cycle.
  RationalSymMatrix bad(4);
  bad.set(1, 2, -1);
  bad.set(2, 3, -1);
  bad.set(3, 4, -1);
  bad.set(1, 4, 1);
  CHECK_FALSE(find_positive_lift(MarkedPointSet(bad)).has_value());
  CHECK_FALSE(brute_force_lift(bad));

  RationalSymMatrix spacelike(1);
  spacelike.set(1, 1, 1);
  CHECK_FALSE(find_positive_lift(MarkedPointSet(spacelike)).has_value());
}

TEST_CASE("positive lifts agree with brute force on all small sign patterns") {
  // All graphs on up to 4 vertices, all +-1 entry patterns.
  for (int n = 1; n <= 4; ++n) {
    const int slots = n * (n + 1) / 2;
    for (int mask = 0; mask < (1 << slots); ++mask) {
      std::vector<std::pair<int, int>> chosen;
      int bit = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
          if (mask & (1 << bit)) chosen.emplace_back(i, j);
          ++bit;
        }
      const int e = static_cast<int>(chosen.size());
      for (int smask = 0; smask < (1 << e); ++smask) {
        RationalSymMatrix m(n);
        for (int k = 0; k < e; ++k)
          m.set(chosen[k].first, chosen[k].second, (smask >> k) & 1 ? 1 : -1);
        // Positive diagonal entries are outside the space closure; the
        // brute force must agree there too (no sign flip fixes them).
        CHECK(find_positive_lift(MarkedPointSet(m)).has_value() == brute_force_lift(m));
      }
    }
  }
}

TEST_CASE("extremality") {
  CHECK(is_polytope(MarkedPointSet(pentagon_gram())));

  RationalSymMatrix single(1);
  single.set(1, 1, -1);
  CHECK(is_polytope(MarkedPointSet(single)));

  // Three collinear points on a line of H^{1,0}: lifts (s, 1) with the
  // form diag(1, -1), so b(x_i, x_j) = s_i s_j - 1. The middle point is
  // the midpoint of the outer two.
  const std::vector<Rational> s{rat(-1, 2), rat(0), rat(1, 2)};
  RationalSymMatrix collinear(3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) collinear.set(i, j, s[i - 1] * s[j - 1] - 1);
  CHECK_FALSE(is_polytope(MarkedPointSet(collinear)));
}

TEST_CASE("simplex recognition") {
  CHECK(is_simplex(MarkedPointSet(pentagon_gram()), 2, 2));
  CHECK_FALSE(is_simplex(MarkedPointSet(pentagon_gram()), 3, 1));
  CHECK(is_simplex(MarkedPointSet(crown(2).gram()), 2, 1));
  CHECK_FALSE(is_simplex(MarkedPointSet(crown(2).gram()), 2, 2));
}

TEST_CASE("construction normalises the Gram matrix") {
  RationalSymMatrix flipped = rescale_by_signs(pentagon_gram(), {1, -1, 1, -1, 1, 1});
  MarkedSimplex s(flipped, 2, 2);
  CHECK(all_entries_nonpositive(s.gram()));
  CHECK(signature(s.gram()) == Signature{2, 3, 0});

  CHECK_THROWS_AS(MarkedSimplex(pentagon_gram(), 3, 1), std::invalid_argument);
  RationalSymMatrix c4(4);
  for (int k = 1; k <= 4; ++k) c4.set(k, k % 4 + 1, -1);
  CHECK_THROWS_AS(MarkedSimplex(c4, 1, 2), std::invalid_argument);  // degenerate
}

TEST_CASE("realization from cochains") {
  Graph c5 = Graph::cycle(5);
  auto s = realize_from_cochain(Cochain1Q(c5, std::vector<Rational>(5, rat(1))));
  REQUIRE(s.has_value());
  CHECK(s->p() == 2);
  CHECK(s->q() == 2);
  CHECK(isometric(*s, pentagon()).isometric);

  Graph c4 = Graph::cycle(4);
  CHECK_FALSE(realize_from_cochain(Cochain1Q(c4, std::vector<Rational>(4, rat(1)))).has_value());

  Graph match(4, {Edge(1, 2), Edge(3, 4)});
  auto cr = realize_from_cochain(Cochain1Q(match, {rat(1), rat(1)}));
  REQUIRE(cr.has_value());
  CHECK(cr->p() == 2);
  CHECK(cr->q() == 1);

  CHECK_THROWS_AS(realize_from_cochain(Cochain1Q(match, {rat(1), rat(-1)})),
                  std::invalid_argument);
}

TEST_CASE("realization round-trips the Gram cocycle exactly") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> num(1, 5), den(1, 3);
  int built = 0;
  for (int rep = 0; rep < 200 && built < 60; ++rep) {
    const int n = 2 + rep % 6;
    Graph g(n);
    std::bernoulli_distribution edge(0.6);
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (edge(rng)) g.add_edge(i, j);
    if (g.edge_count() == 0) continue;
    std::vector<Rational> vals(g.edge_count());
    for (auto& v : vals) v = Rational(num(rng), den(rng));
    Cochain1Q f(g, vals);
    auto s = realize_from_cochain(f);
    if (!s) continue;
    ++built;
    Cochain1Q back = s->cocycle();
    CHECK(back.graph == g);
    CHECK(back.values == vals);
  }
  CHECK(built >= 40);
}

TEST_CASE("marked isometry") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 30; ++rep) {
    MarkedSimplex a = rep % 2 == 0 ? pentagon() : crown(2);
    auto gauge = random_positive_gauge(rng, a.n());
    MarkedSimplex b(rescale_by_diagonal(a.gram(), gauge), a.p(), a.q());
    auto res = isometric(a, b);
    REQUIRE(res.isometric);
    CHECK(res.witness->verify(a.cocycle(), b.cocycle()));
  }

  // Different graphs, same vertex count.
  Graph c4 = Graph::cycle(4);
  auto c4_simplex = realize_from_cochain(Cochain1Q(c4, {rat(1), rat(1), rat(1), rat(2)}));
  REQUIRE(c4_simplex.has_value());
  CHECK_FALSE(isometric(*c4_simplex, crown(2)).isometric);

  // Different vertex counts compare as non-isometric.
  CHECK_FALSE(isometric(pentagon(), crown(2)).isometric);

  // Same graph, different even-cycle invariant.
  auto other = realize_from_cochain(Cochain1Q(c4, {rat(1), rat(1), rat(1), rat(3)}));
  REQUIRE(other.has_value());
  CHECK_FALSE(isometric(*c4_simplex, *other).isometric);
}

TEST_CASE("convex hull counts") {
  CHECK(convex_hull_count(MarkedPointSet(pentagon_gram())) == 1);
  for (int p = 1; p <= 5; ++p)
    CHECK(convex_hull_count(MarkedPointSet(crown(p).gram())) ==
          (std::uint64_t{1} << (p - 1)));
  CHECK(convex_hull_count(MarkedPointSet(ideal_simplex(4).gram())) == 1);

  RationalSymMatrix bad(2);
  bad.set(1, 1, 1);
  CHECK_THROWS_AS(convex_hull_count(MarkedPointSet(bad)), std::invalid_argument);
}

TEST_CASE("named examples") {
  CHECK(crown(2).graph() == Graph(4, {Edge(1, 2), Edge(3, 4)}));
  CHECK(h22_nonideal_infinite().graph() ==
        Graph(5, {Edge(1, 2), Edge(3, 4), Edge(5, 5)}));
  CHECK_FALSE(h22_nonideal_infinite().ideal());
  CHECK(h22_nonideal_infinite().p() == 2);
  CHECK(h22_nonideal_infinite().q() == 2);

  CHECK(signature(product(crown(1), crown(1)).gram()) == Signature{2, 2, 0});

  CHECK(pentagon().ideal());
  CHECK(ideal_simplex(3).graph() == Graph::complete(4));

  CHECK(named_example("pentagon").n() == 5);
  CHECK(named_example("crown:3").n() == 6);
  CHECK(named_example("ideal-hp:4").n() == 5);
  CHECK(named_example("h22-nonideal").n() == 5);
  CHECK_THROWS_AS(named_example("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(named_example("crown:0"), std::invalid_argument);
}

TEST_CASE("every positive cochain on the 5-cycle realizes the pentagon") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> num(1, 6), den(1, 4);
  Graph c5 = Graph::cycle(5);
  for (int rep = 0; rep < 25; ++rep) {
    std::vector<Rational> vals(5);
    for (auto& v : vals) v = Rational(num(rng), den(rng));
    auto s = realize_from_cochain(Cochain1Q(c5, vals));
    REQUIRE(s.has_value());
    auto res = isometric(*s, pentagon());
    CHECK(res.isometric);
    CHECK(res.witness->verify(s->cocycle(), pentagon().cocycle()));
  }
}

TEST_CASE("products compose signatures") {
  MarkedSimplex s = product(crown(1), product(crown(1), point_simplex()));
  CHECK(s.p() == 2);
  CHECK(s.q() == 2);
  CHECK(signature(s.gram()) == Signature{2, 3, 0});

  MarkedSimplex t = product(ideal_simplex(2), point_simplex());
  CHECK(t.p() == 2);
  CHECK(t.q() == 1);
}
