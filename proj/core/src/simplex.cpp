#include "gramvol/simplex.hpp"

#include "gramvol/lp.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace gramvol {

MarkedPointSet::MarkedPointSet(RationalSymMatrix gram) : gram_(std::move(gram)) {}

Graph gram_graph(const MarkedPointSet& ps) {
  const int n = ps.n();
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (ps.gram().at(i, j) != 0) g.add_edge(i, j);
  return g;
}

bool is_ideal(const MarkedPointSet& ps) {
  for (int i = 1; i <= ps.n(); ++i)
    if (ps.gram().at(i, i) != 0) return false;
  return true;
}

Cochain1Q gram_cocycle(const MarkedPointSet& ps) {
  Graph g = gram_graph(ps);
  std::vector<Rational> vals;
  vals.reserve(g.edge_count());
  for (const Edge& e : g.edges()) vals.push_back(-ps.gram().at(e.u, e.v));
  return Cochain1Q(std::move(g), std::move(vals));
}

std::optional<std::vector<int>> find_positive_lift(const MarkedPointSet& ps) {
  const int n = ps.n();
  for (int i = 1; i <= n; ++i)
    if (ps.gram().at(i, i) > 0) return std::nullopt;

  auto sign_result = is_sign_coboundary(restrict_sign_part(gram_cocycle(ps)));
  if (!sign_result.is_coboundary) return std::nullopt;

  std::vector<int> eps(n + 1, 1);
  for (int v = 1; v <= n; ++v) eps[v] = (*sign_result.witness)[v] ? -1 : 1;

  // The rescaled entries are all <= 0 now; 0 stays outside the convex hull
  // of the lift because any nonnegative kernel combination is supported on
  // all-zero rows (whose vectors the order convention makes positive).
  // Re-verify that by linear feasibility.
  RationalSymMatrix rescaled = rescale_by_signs(ps.gram(), eps);
  std::vector<int> nonisolated;
  for (int v = 1; v <= n; ++v)
    if (!rescaled.is_zero_row(v)) nonisolated.push_back(v);
  if (!nonisolated.empty()) {
    LpProblem lp(n);
    for (int r = 1; r <= n; ++r) {
      std::vector<Rational> row(n);
      for (int c = 1; c <= n; ++c) row[c - 1] = rescaled.at(r, c);
      lp.add_eq(row, Rational(0));
    }
    std::vector<Rational> mass(n, Rational(0));
    for (int v : nonisolated) mass[v - 1] = 1;
    lp.add_eq(mass, Rational(1));
    if (lp_feasible(lp))
      throw std::logic_error("positive-lift feasibility invariant violated");
  }
  return eps;
}

bool is_polytope(const MarkedPointSet& ps) {
  auto lift = find_positive_lift(ps);
  if (!lift) return false;
  const int n = ps.n();
  RationalSymMatrix g = rescale_by_signs(ps.gram(), *lift);
  if (signature(g).invertible()) return true;

  for (int i = 1; i <= n; ++i) {
    if (g.is_zero_row(i)) continue;  // extremal by the order convention
    // Is x_i a nontrivial nonnegative combination of the others? With
    // c_i = 1 and c_j = -t_j, the combination is a Gram-kernel vector.
    // Variables: t_j >= 0 for j != i.
    LpProblem lp(n - 1);
    for (int r = 1; r <= n; ++r) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (int c = 1; c <= n; ++c)
        if (c != i) row.push_back(-g.at(r, c));
      lp.add_eq(row, -g.at(r, i));
    }
    if (lp_feasible(lp)) return false;
  }
  return true;
}

bool is_simplex(const MarkedPointSet& ps, int p, int q) {
  if (p < 0 || q < 0 || ps.n() != p + q + 1) return false;
  if (signature(ps.gram()) != Signature{p, q + 1, 0}) return false;
  return find_positive_lift(ps).has_value();
}

MarkedSimplex::MarkedSimplex(const MarkedPointSet& base, int p, int q)
    : base_(base.gram()), p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature parameters must be nonnegative");
  if (base.n() != p + q + 1)
    throw std::invalid_argument("a simplex needs p+q+1 vertices");
  auto lift = find_positive_lift(base);
  if (!lift) throw std::invalid_argument("point set admits no positive lift");
  base_ = MarkedPointSet(rescale_by_signs(base.gram(), *lift));
  if (signature(base_.gram()) != Signature{p, q + 1, 0})
    throw std::invalid_argument("Gram matrix does not have signature (p, q+1)");
}

MarkedSimplex::MarkedSimplex(RationalSymMatrix gram, int p, int q)
    : MarkedSimplex(MarkedPointSet(std::move(gram)), p, q) {}

std::optional<MarkedSimplex> realize_from_cochain(const Cochain1Q& f) {
  for (const Rational& v : f.values)
    if (v <= 0)
      throw std::invalid_argument("realization requires a positive cochain");
  const int n = f.graph.vertex_count();
  RationalSymMatrix gram(n);
  for (int k = 0; k < f.graph.edge_count(); ++k) {
    const Edge e = f.graph.edges()[k];
    gram.set(e.u, e.v, -f.values[k]);
  }
  Signature sig = signature(gram);
  if (!sig.invertible()) return std::nullopt;
  // Entries are <= 0, so the diagonal cannot be positive definite: neg >= 1.
  return MarkedSimplex(std::move(gram), sig.pos, sig.neg - 1);
}

IsometryResult isometric(const MarkedSimplex& a, const MarkedSimplex& b) {
  if (a.n() != b.n()) return {false, std::nullopt};
  if (gram_graph(a.base()) != gram_graph(b.base())) return {false, std::nullopt};
  auto eq = classes_equal(a.cocycle(), b.cocycle());
  return {eq.equal, std::move(eq.witness)};
}

std::uint64_t convex_hull_count(const MarkedPointSet& ps) {
  if (!find_positive_lift(ps))
    throw std::invalid_argument("point set admits no positive lift");
  const int h0 = h0_dimension(gram_graph(ps), Coefficients::Reals);
  if (h0 == 0) return 1;
  return std::uint64_t{1} << (h0 - 1);
}

MarkedSimplex ideal_simplex(int p) {
  if (p < 1) throw std::invalid_argument("ideal_simplex needs p >= 1");
  const int n = p + 1;
  RationalSymMatrix gram(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gram.set(i, j, -1);
  return MarkedSimplex(std::move(gram), p, 0);
}

MarkedSimplex crown(int p) {
  if (p < 1) throw std::invalid_argument("crown needs p >= 1");
  RationalSymMatrix gram(2 * p);
  for (int k = 1; k <= p; ++k) gram.set(2 * k - 1, 2 * k, -1);
  return MarkedSimplex(std::move(gram), p, p - 1);
}

MarkedSimplex pentagon() {
  RationalSymMatrix gram(5);
  for (int k = 1; k <= 5; ++k) gram.set(k, k % 5 + 1, -1);
  return MarkedSimplex(std::move(gram), 2, 2);
}

MarkedSimplex point_simplex() {
  RationalSymMatrix gram(1);
  gram.set(1, 1, -1);
  return MarkedSimplex(std::move(gram), 0, 0);
}

MarkedSimplex product(const MarkedSimplex& a, const MarkedSimplex& b) {
  return MarkedSimplex(direct_sum(a.gram(), b.gram()), a.p() + b.p(),
                       a.q() + b.q() + 1);
}

MarkedSimplex h22_nonideal_infinite() {
  return product(crown(1), product(crown(1), point_simplex()));
}

namespace {

int parse_parameter(std::string_view text, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
    throw std::invalid_argument(std::string("bad parameter for example '") +
                                std::string(name) + "'");
  return value;
}

}  // namespace

MarkedSimplex named_example(std::string_view name) {
  if (name == "pentagon") return pentagon();
  if (name == "h22-nonideal") return h22_nonideal_infinite();
  if (name.starts_with("crown:")) return crown(parse_parameter(name.substr(6), name));
  if (name.starts_with("ideal-hp:")) return ideal_simplex(parse_parameter(name.substr(9), name));
  throw std::invalid_argument("unknown example '" + std::string(name) +
                              "'; known: pentagon, crown:<p>, ideal-hp:<p>, h22-nonideal");
}

}  // namespace gramvol
