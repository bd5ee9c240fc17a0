#include "gramvol/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gramvol {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::is_isolated(int v) const {
  check_vertex(v);
  for (const Edge& e : edges_)
    if (e.u == v || e.v == v) return false;
  return true;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> id(n_ + 1, -1);
  int next = 0;
  for (int start = 1; start <= n_; ++start) {
    if (id[start] >= 0) continue;
    id[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (id[w] < 0) {
          id[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

int Graph::component_count() const {
  auto ids = component_ids();
  int mx = -1;
  for (int v = 1; v <= n_; ++v) mx = std::max(mx, ids[v]);
  return mx + 1;
}

Graph Graph::cycle(int n) {
  if (n < 1) throw std::invalid_argument("cycle length must be positive");
  Graph g(n);
  if (n == 1) {
    g.add_edge(1, 1);
    return g;
  }
  for (int k = 1; k <= n; ++k) g.add_edge(k, k % n + 1);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::perfect_matching(int pairs) {
  if (pairs < 1) throw std::invalid_argument("need at least one pair");
  Graph g(2 * pairs);
  for (int k = 1; k <= pairs; ++k) g.add_edge(2 * k - 1, 2 * k);
  return g;
}

}  // namespace gramvol
