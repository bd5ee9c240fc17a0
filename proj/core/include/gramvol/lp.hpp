#pragma once

#include "gramvol/rational.hpp"

#include <vector>

namespace gramvol {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;            // objective at the optimum
  std::vector<Rational> x;   // primal solution, 0-based, size nvars
};

// max objective . x   subject to   rows[i] . x <= rhs[i],  x >= 0.
//
// Exact rational data in, exact answer out. Internally each row is cleared
// to integers and solved by a fraction-free (integer pivoting) two-phase
// simplex with Bland's rule; a 64-bit tableau is tried first and the
// computation falls back to arbitrary precision on overflow.
struct LpProblem {
  int nvars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  explicit LpProblem(int vars)
      : nvars(vars), objective(static_cast<std::size_t>(vars), Rational(0)) {}

  void add_le(std::vector<Rational> coeffs, Rational bound);
  void add_ge(std::vector<Rational> coeffs, const Rational& bound);
  void add_eq(const std::vector<Rational>& coeffs, const Rational& bound);
};

LpResult lp_maximize(const LpProblem& p);

// Phase-one only: is {x >= 0 : A x <= b} nonempty?
bool lp_feasible(const LpProblem& p);

}  // namespace gramvol
