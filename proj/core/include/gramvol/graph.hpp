#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace gramvol {

// Unordered pair of vertices, normalised so u <= v. A loop has u == v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite undirected graph with loops, vertices 1..n. The edge list is kept
// sorted and duplicate-free, so iteration order is canonical. Per-vertex
// arrays returned by this module are indexed 1..n with slot 0 unused.
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::initializer_list<Edge> edges);
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  bool has_loop(int v) const { return has_edge(v, v); }

  // Position of {a, b} in edges(), or -1 when absent.
  int edge_index(int a, int b) const;

  // Adjacent vertices in increasing order; contains v itself iff v has a
  // loop. A vertex is isolated when it has no incident edge at all.
  std::vector<int> neighbors(int v) const;
  bool adjacent(int a, int b) const { return has_edge(a, b); }
  bool is_isolated(int v) const;

  // Component ids, 0-based, assigned by increasing smallest vertex.
  std::vector<int> component_ids() const;
  int component_count() const;

  static Graph cycle(int n);            // C_n; C_1 is a single looped vertex
  static Graph complete(int n);         // loopless K_n
  static Graph perfect_matching(int pairs);  // edges {1,2}, {3,4}, ...

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Edge> edges_;
};

}  // namespace gramvol
