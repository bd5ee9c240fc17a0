#pragma once

#include "gramvol/cohomology.hpp"
#include "gramvol/graph.hpp"
#include "gramvol/sym_matrix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gramvol {

// A marked finite set of n projective lines, represented by the Gram matrix
// of a chosen lift: gram(i, j) = b(x_i, x_j). When the span of the lift is
// non-degenerate this determines the configuration up to isometry, and the
// kernel of the Gram matrix consists exactly of the linear relations among
// the lift vectors; operations that rely on that reading say so.
class MarkedPointSet {
 public:
  explicit MarkedPointSet(RationalSymMatrix gram);

  int n() const { return gram_.size(); }
  const RationalSymMatrix& gram() const { return gram_; }
  Signature ambient_signature() const { return signature(gram_); }

 private:
  RationalSymMatrix gram_;
};

// Vertices 1..n; edge {i, j} iff gram(i, j) != 0, with i = j giving loops.
Graph gram_graph(const MarkedPointSet& ps);

// No loops, i.e. every point lies on the isotropic cone.
bool is_ideal(const MarkedPointSet& ps);

// Edge-indexed cocycle with values -gram(i, j).
Cochain1Q gram_cocycle(const MarkedPointSet& ps);

// Searches for signs making every rescaled Gram entry <= 0, so that the
// rescaled lift is positive. Obstructions: a positive diagonal entry, or a
// sign part of the Gram cocycle that is not a coboundary. Vertices with an
// all-zero Gram row stay extremal under the fixed-vector-space-order
// convention, which also keeps 0 outside the convex hull of the lift; that
// condition is re-verified by exact linear feasibility. Returns the sign
// vector (1-based) or nullopt.
std::optional<std::vector<int>> find_positive_lift(const MarkedPointSet& ps);

// Every point extremal in the convex hull of a positive lift, decided by
// exact linear feasibility over the kernel of the rescaled Gram matrix
// (the span is taken to be non-degenerate, see MarkedPointSet). False when
// no positive lift exists.
bool is_polytope(const MarkedPointSet& ps);

// n = p+q+1, invertible Gram of signature (p, q+1), and a positive lift.
bool is_simplex(const MarkedPointSet& ps, int p, int q);

// A geodesic simplex with p+q+1 marked vertices. Construction validates
// the signature and positive-lift conditions and normalises the stored
// Gram matrix to positive-lift form (all entries <= 0); every vertex is
// then automatically extremal because the Gram matrix is invertible.
class MarkedSimplex {
 public:
  MarkedSimplex(const MarkedPointSet& base, int p, int q);
  MarkedSimplex(RationalSymMatrix gram, int p, int q);

  int n() const { return base_.n(); }
  int p() const { return p_; }
  int q() const { return q_; }
  const MarkedPointSet& base() const { return base_; }
  const RationalSymMatrix& gram() const { return base_.gram(); }
  Graph graph() const { return gram_graph(base_); }
  Cochain1Q cocycle() const { return gram_cocycle(base_); }
  bool ideal() const { return is_ideal(base_); }

 private:
  MarkedPointSet base_;
  int p_, q_;
};

// Builds the simplex whose Gram matrix has entry -f on each edge and 0
// elsewhere; p and q+1 are read off the signature. Returns nullopt when
// the matrix is degenerate. Cochain values must be positive (they are the
// Gram cocycle of a positive lift); throws otherwise.
std::optional<MarkedSimplex> realize_from_cochain(const Cochain1Q& f);

struct IsometryResult {
  bool isometric = false;
  std::optional<GaugeWitness> witness;
};

// Marked isometry (identity marking): equal Gram graphs as labelled graphs
// and cohomologous Gram cocycles. Differing vertex counts compare false.
IsometryResult isometric(const MarkedSimplex& a, const MarkedSimplex& b);

// 2^(dim H^0(G, R) - 1) distinct convex hulls; 1 when no component is
// bipartite (dim H^0 = 0, where the exponent formula would go negative).
// Throws when no positive lift exists.
std::uint64_t convex_hull_count(const MarkedPointSet& ps);

// Named constructions.
MarkedSimplex ideal_simplex(int p);        // loopless K_{p+1}, all entries -1
MarkedSimplex crown(int p);                // 2p vertices paired off, ideal
MarkedSimplex pentagon();                  // the 5-cycle with unit cocycle
MarkedSimplex point_simplex();             // single vertex, gram [[-1]]
MarkedSimplex h22_nonideal_infinite();     // two disjoint edges plus a looped vertex

// Orthogonal sum: block-diagonal Gram. Takes H^{p1,q1} x H^{p2,q2} to
// H^{p1+p2, q1+q2+1}.
MarkedSimplex product(const MarkedSimplex& a, const MarkedSimplex& b);

// CLI-facing names: "pentagon", "crown:p", "ideal-hp:p", "h22-nonideal".
MarkedSimplex named_example(std::string_view name);

}  // namespace gramvol
