#include "gramvol/json_io.hpp"

#include <doctest.h>

using namespace gramvol;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(n, d); }
}

TEST_CASE("rational serialization") {
  CHECK(rational_to_json(rat(5)) == Json(5));
  CHECK(rational_to_json(rat(-3, 2)) == Json("-3/2"));
  CHECK(rational_from_json(Json(7)) == rat(7));
  CHECK(rational_from_json(Json("-3/2")) == rat(-3, 2));
  CHECK(rational_from_json(Json("4/6")) == rat(2, 3));

  // Integers beyond double-exact range travel as strings.
  const Rational big = Rational(BigInt("123456789012345678901234567890"));
  Json j = rational_to_json(big);
  CHECK(j.is_string());
  CHECK(rational_from_json(j) == big);

  CHECK_THROWS_AS(rational_from_json(Json("1/0")), json_format_error);
  CHECK_THROWS_AS(rational_from_json(Json("a/b")), json_format_error);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), json_format_error);
}

TEST_CASE("matrix serialization") {
  RationalSymMatrix m(2);
  m.set(1, 1, rat(-1));
  m.set(1, 2, rat(-3, 2));
  Json j = matrix_to_json(m);
  CHECK(matrix_from_json(j) == m);

  Json bad = j;
  bad["entries"][0][1] = "1/2";  // breaks symmetry
  CHECK_THROWS_AS(matrix_from_json(bad), json_format_error);
  CHECK_THROWS_AS(matrix_from_json(Json{{"n", 2}}), json_format_error);
}

TEST_CASE("graph serialization") {
  Graph g(4, {Edge(1, 2), Edge(2, 2), Edge(3, 4)});
  CHECK(graph_from_json(graph_to_json(g)) == g);

  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}, {"edges", {{2, 1}}}}), json_format_error);
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}, {"edges", {{1, 3}}}}), json_format_error);
}

TEST_CASE("cochain serialization") {
  Graph g(3, {Edge(1, 2), Edge(2, 3), Edge(3, 3)});
  Cochain1Q f(g, {rat(1), rat(-1, 2), rat(4)});
  Json j = cochain_to_json(f);
  Cochain1Q back = cochain_from_json(j);
  CHECK(back.graph == g);
  CHECK(back.values == f.values);

  Json missing = j;
  missing["values"].erase("1-2");
  CHECK_THROWS_AS(cochain_from_json(missing), json_format_error);
}

TEST_CASE("simplex serialization and validation") {
  Json j = simplex_to_json(pentagon());
  MarkedSimplex back = simplex_from_json(j);
  CHECK(back.gram() == pentagon().gram());
  CHECK(back.p() == 2);
  CHECK(back.q() == 2);

  // Wrong signature parameters are a domain rejection, not a format error.
  Json wrong = j;
  wrong["p"] = 3;
  wrong["q"] = 1;
  CHECK_THROWS_AS(simplex_from_json(wrong), std::invalid_argument);
}

TEST_CASE("verdict and estimate shapes") {
  auto v = decide_finiteness(crown(2));
  Json j = verdict_to_json(v);
  CHECK(j["finite"] == false);
  CHECK(j["stable_set"].size() == 2);
  CHECK(j["weights"].size() == 4);

  Json fin = verdict_to_json(decide_finiteness(pentagon()));
  CHECK(fin["finite"] == true);
  CHECK(fin["stable_set"].is_null());
  CHECK(fin["weights"].is_null());

  VolumeEstimate e{8.0, 1000, 2.5, 0.1, 77};
  Json je = estimate_to_json(e);
  CHECK(je["R"] == 8.0);
  CHECK(je["samples"] == 1000);
  CHECK(je["seed"] == 77);
}

TEST_CASE("witness serialization is exact") {
  Graph c3 = Graph::cycle(3);
  Cochain1Q f1(c3, {rat(1), rat(1), rat(1)});
  Cochain1Q f2(c3, {rat(1), rat(1), rat(2)});
  auto eq = classes_equal(f1, f2);
  REQUIRE(eq.equal);
  Json j = witness_to_json(*eq.witness);
  CHECK(j["rational"] == false);
  CHECK(j["vertices"].size() == 3);
}
