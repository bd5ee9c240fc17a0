#include "gramvol/cohomology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gramvol {

Cochain1Q::Cochain1Q(Graph g, std::vector<Rational> vals)
    : graph(std::move(g)), values(std::move(vals)) {
  if (values.size() != static_cast<std::size_t>(graph.edge_count()))
    throw std::invalid_argument("cochain needs one value per edge");
  for (const Rational& v : values)
    if (v == 0) throw std::invalid_argument("cochain values must be nonzero");
}

const Rational& Cochain1Q::value(int a, int b) const {
  int k = graph.edge_index(a, b);
  if (k < 0) throw std::out_of_range("no such edge");
  return values[k];
}

Cochain1Z2::Cochain1Z2(Graph g, std::vector<std::uint8_t> vals)
    : graph(std::move(g)), values(std::move(vals)) {
  if (values.size() != static_cast<std::size_t>(graph.edge_count()))
    throw std::invalid_argument("cochain needs one value per edge");
  for (std::uint8_t v : values)
    if (v > 1) throw std::invalid_argument("Z/2 values must be 0 or 1");
}

std::uint8_t Cochain1Z2::value(int a, int b) const {
  int k = graph.edge_index(a, b);
  if (k < 0) throw std::out_of_range("no such edge");
  return values[k];
}

Cochain1Q differential(const Graph& g, const std::vector<Rational>& g0) {
  if (g0.size() != static_cast<std::size_t>(g.vertex_count()) + 1)
    throw std::invalid_argument("0-cochain must have n+1 entries (1-based)");
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g0[v] == 0) throw std::invalid_argument("0-cochain values must be nonzero");
  std::vector<Rational> vals;
  vals.reserve(g.edge_count());
  for (const Edge& e : g.edges()) vals.push_back(g0[e.u] * g0[e.v]);
  return Cochain1Q(g, std::move(vals));
}

Cochain1Z2 differential(const Graph& g, const std::vector<std::uint8_t>& g0) {
  if (g0.size() != static_cast<std::size_t>(g.vertex_count()) + 1)
    throw std::invalid_argument("0-cochain must have n+1 entries (1-based)");
  std::vector<std::uint8_t> vals;
  vals.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    vals.push_back(static_cast<std::uint8_t>((g0[e.u] ^ g0[e.v]) & 1));
  return Cochain1Z2(g, std::move(vals));
}

namespace {

// 2-colouring per component; a component fails on any loop or odd cycle.
std::vector<bool> bipartite_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n + 1, -1);
  auto ids = g.component_ids();
  std::vector<bool> ok(g.component_count(), true);
  for (int start = 1; start <= n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (g.has_loop(v)) ok[ids[v]] = false;
      for (int w : g.neighbors(v)) {
        if (w == v) continue;
        if (colour[w] < 0) {
          colour[w] = colour[v] ^ 1;
          q.push(w);
        } else if (colour[w] == colour[v]) {
          ok[ids[v]] = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

int h0_dimension(const Graph& g, Coefficients c) {
  if (c == Coefficients::Mod2) return g.component_count();
  auto ok = bipartite_components(g);
  return static_cast<int>(std::count(ok.begin(), ok.end(), true));
}

int h1_dimension(const Graph& g, Coefficients c) {
  return g.edge_count() - g.vertex_count() + h0_dimension(g, c);
}

CycleBasis cycle_basis(const Graph& g) {
  const int n = g.vertex_count();
  CycleBasis out;
  out.parent.assign(n + 1, 0);
  out.depth.assign(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  std::vector<bool> edge_in_tree(g.edge_count(), false);

  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    out.roots.push_back(start);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (w == v || seen[w]) continue;
        seen[w] = true;
        out.parent[w] = v;
        out.depth[w] = out.depth[v] + 1;
        edge_in_tree[g.edge_index(v, w)] = true;
        q.push(w);
      }
    }
  }

  for (int k = 0; k < g.edge_count(); ++k) {
    if (edge_in_tree[k]) continue;
    const Edge e = g.edges()[k];
    out.chords.push_back(e);
    std::vector<Edge> cycle{e};
    if (!e.is_loop()) {
      // Close the chord through the forest: walk both endpoints to their
      // least common ancestor.
      int a = e.u, b = e.v;
      while (out.depth[a] > out.depth[b]) {
        cycle.emplace_back(a, out.parent[a]);
        a = out.parent[a];
      }
      while (out.depth[b] > out.depth[a]) {
        cycle.emplace_back(b, out.parent[b]);
        b = out.parent[b];
      }
      while (a != b) {
        cycle.emplace_back(a, out.parent[a]);
        cycle.emplace_back(b, out.parent[b]);
        a = out.parent[a];
        b = out.parent[b];
      }
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

SignCoboundaryResult is_sign_coboundary(const Cochain1Z2& f) {
  const Graph& g = f.graph;
  const int n = g.vertex_count();
  CycleBasis basis = cycle_basis(g);

  // Forest propagation fixes the only candidate witness (up to a constant
  // per component, pinned to 0 at the roots).
  std::vector<std::uint8_t> witness(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int v = 1; v <= n; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return basis.depth[a] < basis.depth[b]; });
  for (int v : order) {
    if (basis.parent[v] == 0) continue;
    witness[v] = static_cast<std::uint8_t>(
        (witness[basis.parent[v]] ^ f.value(v, basis.parent[v])) & 1);
  }
  for (const Edge& e : g.edges()) {
    std::uint8_t expect = e.is_loop()
                              ? std::uint8_t{0}
                              : static_cast<std::uint8_t>(witness[e.u] ^ witness[e.v]);
    if (f.value(e.u, e.v) != expect) return {false, std::nullopt};
  }
  return {true, witness};
}

bool GaugeWitness::verify(const Cochain1Q& from, const Cochain1Q& to) const {
  if (from.graph != to.graph) return false;
  for (const Rational& t2 : t_squared)
    if (t2 <= 0) return false;
  for (int k = 0; k < from.graph.edge_count(); ++k) {
    const Edge e = from.graph.edges()[k];
    const Rational ratio = to.values[k] / from.values[k];
    const Rational c = coeff[e.u] * coeff[e.v];
    const int delta = exponent[e.u] + exponent[e.v];
    if (component[e.u] != component[e.v]) return false;
    const Rational& t2 = t_squared[component[e.u]];
    Rational lhs = c;
    if (delta == 2)
      lhs *= t2;
    else if (delta == -2)
      lhs /= t2;
    if (lhs != ratio) return false;
  }
  return true;
}

bool GaugeWitness::is_rational() const {
  for (const Rational& t2 : t_squared)
    if (!rational_sqrt(t2)) return false;
  return true;
}

std::optional<std::vector<Rational>> GaugeWitness::rational_values() const {
  std::vector<Rational> roots;
  roots.reserve(t_squared.size());
  for (const Rational& t2 : t_squared) {
    auto r = rational_sqrt(t2);
    if (!r) return std::nullopt;
    roots.push_back(*r);
  }
  std::vector<Rational> g(coeff.size());
  for (std::size_t v = 1; v < coeff.size(); ++v) {
    const Rational& t = roots[component[v]];
    g[v] = exponent[v] > 0 ? Rational(coeff[v] * t) : Rational(coeff[v] / t);
  }
  return g;
}

ClassEqualityResult classes_equal(const Cochain1Q& f1, const Cochain1Q& f2) {
  if (f1.graph != f2.graph)
    throw std::invalid_argument("classes_equal requires cochains on the same graph");
  const Graph& g = f1.graph;
  const int n = g.vertex_count();
  CycleBasis basis = cycle_basis(g);
  auto ids = g.component_ids();

  GaugeWitness w;
  w.coeff.assign(n + 1, Rational(1));
  w.exponent.assign(n + 1, 1);
  w.component.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) w.component[v] = ids[v];
  const int comps = g.component_count();
  w.t_squared.assign(comps, Rational(1));
  std::vector<bool> t2_pinned(comps, false);

  // Tree propagation: g(child) = ratio(edge) / g(parent).
  std::vector<int> order;
  order.reserve(n);
  for (int v = 1; v <= n; ++v) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return basis.depth[a] < basis.depth[b]; });
  for (int v : order) {
    const int p = basis.parent[v];
    if (p == 0) continue;
    const int k = g.edge_index(v, p);
    const Rational ratio = f2.values[k] / f1.values[k];
    w.coeff[v] = ratio / w.coeff[p];
    w.exponent[v] = -w.exponent[p];
  }

  // Chord and loop constraints.
  for (const Edge& e : basis.chords) {
    const int k = g.edge_index(e.u, e.v);
    const Rational ratio = f2.values[k] / f1.values[k];
    const Rational c = w.coeff[e.u] * w.coeff[e.v];
    const int delta = w.exponent[e.u] + w.exponent[e.v];
    if (delta == 0) {
      if (c != ratio) return {false, std::nullopt};
      continue;
    }
    Rational required = ratio / c;  // t^delta
    if (delta < 0) required = 1 / required;
    if (required <= 0) return {false, std::nullopt};
    const int comp = ids[e.u];
    if (!t2_pinned[comp]) {
      w.t_squared[comp] = required;
      t2_pinned[comp] = true;
    } else if (w.t_squared[comp] != required) {
      return {false, std::nullopt};
    }
  }
  return {true, std::move(w)};
}

Cochain1Z2 restrict_sign_part(const Cochain1Q& f) {
  std::vector<std::uint8_t> vals;
  vals.reserve(f.values.size());
  for (const Rational& v : f.values) vals.push_back(v < 0 ? 1 : 0);
  return Cochain1Z2(f.graph, std::move(vals));
}

}  // namespace gramvol
