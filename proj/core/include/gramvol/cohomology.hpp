#pragma once

#include "gramvol/graph.hpp"
#include "gramvol/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gramvol {

// Coefficient groups for graph cochains. The multiplicative group of
// nonzero reals is handled with rational values (Cochain1Q below); the
// additive reals are reached through their exponential image, so classes
// with trivial sign part stand in for real classes and no additive cochain
// type is needed.
enum class Coefficients { Reals, Mod2 };

// 1-cochain with values in Q*, one value per edge of the graph, aligned
// with graph.edges(). All values nonzero.
struct Cochain1Q {
  Graph graph;
  std::vector<Rational> values;

  Cochain1Q(Graph g, std::vector<Rational> vals);
  const Rational& value(int a, int b) const;
  const Rational& value(const Edge& e) const { return value(e.u, e.v); }
};

// 1-cochain with values in Z/2 (0 or 1 per edge).
struct Cochain1Z2 {
  Graph graph;
  std::vector<std::uint8_t> values;

  Cochain1Z2(Graph g, std::vector<std::uint8_t> vals);
  std::uint8_t value(int a, int b) const;
};

// 0-cochains are plain per-vertex arrays indexed 1..n (slot 0 unused).

// (dg)({i,j}) = g(i) g(j); loops give g(i)^2. Values must be nonzero.
Cochain1Q differential(const Graph& g, const std::vector<Rational>& g0);

// (dg)({i,j}) = g(i) + g(j) mod 2; loops map to 0.
Cochain1Z2 differential(const Graph& g, const std::vector<std::uint8_t>& g0);

// dim H^0: over the reals, the number of bipartite connected components
// (a loop makes its component non-bipartite); over Z/2, the number of
// connected components.
int h0_dimension(const Graph& g, Coefficients c);

// dim H^1 = |A| - |S| + dim H^0.
int h1_dimension(const Graph& g, Coefficients c);

// Spanning forest + fundamental cycles. The forest is built by BFS from
// the smallest vertex of each component, scanning neighbours in increasing
// order, so both the forest and the basis are canonical. Every non-forest
// edge contributes one basis cycle (its tree path closed up); a loop is a
// cycle of length 1.
struct CycleBasis {
  std::vector<int> parent;       // 1..n; 0 at roots
  std::vector<int> depth;        // 1..n; 0 at roots
  std::vector<int> roots;        // one per component, increasing
  std::vector<Edge> chords;      // non-forest edges, in edge order
  std::vector<std::vector<Edge>> cycles;  // cycles[k] closes chords[k]
};

CycleBasis cycle_basis(const Graph& g);

struct SignCoboundaryResult {
  bool is_coboundary = false;
  // Witness g with dg = f, built by forest propagation; present on success.
  std::optional<std::vector<std::uint8_t>> witness;
};

// f = dg for some g iff every loop carries 0 and f sums to 0 over every
// basis cycle.
SignCoboundaryResult is_sign_coboundary(const Cochain1Z2& f);

// Multiplicative gauge in split form: g(v) = coeff[v] * t_c^exponent[v],
// where c = component[v] and t_c is a positive parameter with
// t_c^2 = t_squared[c]. t_c itself may be irrational; verification and
// equality decisions stay exact because only t^2 ever appears.
struct GaugeWitness {
  std::vector<Rational> coeff;      // 1..n
  std::vector<int> exponent;        // 1..n, each +1 or -1
  std::vector<int> component;       // 1..n, 0-based component id
  std::vector<Rational> t_squared;  // per component, 1 when unconstrained

  // Exact check that to = from * dg.
  bool verify(const Cochain1Q& from, const Cochain1Q& to) const;

  bool is_rational() const;
  // Numeric gauge values when every t_squared is a perfect square.
  std::optional<std::vector<Rational>> rational_values() const;
};

struct ClassEqualityResult {
  bool equal = false;
  std::optional<GaugeWitness> witness;
};

// Decides equality of [f1] and [f2] in H^1(G, R*). Gauge propagation over
// the spanning forest expresses g(v) = c_v t^{e_v} with e_v alternating
// along the tree; every chord and loop yields a constraint c t^d = f2/f1
// with d in {-2, 0, 2}. d = 0 constraints are exact equalities; d = +-2
// constraints must agree on t^2 and force t^2 > 0. Throws on a graph
// mismatch between the two cochains.
ClassEqualityResult classes_equal(const Cochain1Q& f1, const Cochain1Q& f2);

// Edgewise sign map: positive -> 0, negative -> 1.
Cochain1Z2 restrict_sign_part(const Cochain1Q& f);

}  // namespace gramvol
