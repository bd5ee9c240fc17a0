#pragma once

#include "gramvol/rational.hpp"

#include <vector>

namespace gramvol {

// Inertia (p, q, nullity) of a rational symmetric bilinear form.
struct Signature {
  int pos = 0;
  int neg = 0;
  int nul = 0;

  int dimension() const { return pos + neg + nul; }
  int rank() const { return pos + neg; }
  bool invertible() const { return nul == 0; }

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

// Dense symmetric matrix over Q. Indices are 1-based throughout, matching
// the vertex labelling 1..n used everywhere else.
class RationalSymMatrix {
 public:
  explicit RationalSymMatrix(int n);

  static RationalSymMatrix identity(int n);

  int size() const { return n_; }

  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  // Assigns both (i, j) and (j, i).
  void set(int i, int j, const Rational& value);

  bool is_zero_row(int i) const;

  friend bool operator==(const RationalSymMatrix&, const RationalSymMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<Rational> entries_;  // row-major n*n
};

// Exact inertia by symmetric congruence elimination: 1x1 diagonal pivots
// when available, otherwise a 2x2 pivot on an off-diagonal entry of a
// zero-diagonal block, which contributes (1,1). Total on all inputs and
// invariant under congruence m -> D m D^T.
Signature signature(const RationalSymMatrix& m);

// Exact determinant by fraction-free-ordered Gaussian elimination.
Rational determinant(const RationalSymMatrix& m);

int rank(const RationalSymMatrix& m);

// Gram matrix of the weighted n-cycle: weights[k] sits on the edge
// {k+1, k+2} (and the wrap-around edge {n, 1}), diagonal zero.
// Requires n >= 3 and strictly negative weights; throws otherwise.
// The 1- and 2-vertex cycles are handled by the census module.
RationalSymMatrix cycle_matrix(const std::vector<Rational>& weights);

RationalSymMatrix direct_sum(const RationalSymMatrix& a, const RationalSymMatrix& b);

// D m D for the diagonal sign matrix D = diag(signs), signs[v] in {-1, +1}
// indexed 1..n (slot 0 unused).
RationalSymMatrix rescale_by_signs(const RationalSymMatrix& m, const std::vector<int>& signs);

// D m D for an arbitrary invertible rational diagonal (1-based, slot 0 unused).
RationalSymMatrix rescale_by_diagonal(const RationalSymMatrix& m, const std::vector<Rational>& d);

}  // namespace gramvol
