#include "gramvol/lp.hpp"

#include <limits>
#include <stdexcept>

namespace gramvol {

void LpProblem::add_le(std::vector<Rational> coeffs, Rational bound) {
  if (coeffs.size() != static_cast<std::size_t>(nvars))
    throw std::invalid_argument("constraint arity mismatch");
  rows.push_back(std::move(coeffs));
  rhs.push_back(std::move(bound));
}

void LpProblem::add_ge(std::vector<Rational> coeffs, const Rational& bound) {
  for (Rational& c : coeffs) c = -c;
  add_le(std::move(coeffs), -bound);
}

void LpProblem::add_eq(const std::vector<Rational>& coeffs, const Rational& bound) {
  add_le(coeffs, bound);
  add_ge(coeffs, bound);
}

namespace {

struct Overflow64 {};

inline long long checked_narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Overflow64{};
  return static_cast<long long>(v);
}

struct Ops64 {
  using Int = long long;
  static Int from_big(const BigInt& b) {
    if (b > std::numeric_limits<long long>::max() || b < std::numeric_limits<long long>::min())
      throw Overflow64{};
    return b.convert_to<long long>();
  }
  // (a*piv - b*c) / den; the division is exact for Bareiss-form tableaus.
  static Int combine(Int a, Int piv, Int b, Int c, Int den) {
    __int128 num = static_cast<__int128>(a) * piv - static_cast<__int128>(b) * c;
    if (num % den != 0) throw std::logic_error("fraction-free pivot invariant violated");
    return checked_narrow(num / den);
  }
  static bool ratio_less(Int a1, Int b1, Int a2, Int b2) {
    return static_cast<__int128>(a1) * b2 < static_cast<__int128>(a2) * b1;
  }
  static Rational to_rational(Int num, Int den) { return Rational(num, den); }
};

struct OpsBig {
  using Int = BigInt;
  static Int from_big(const BigInt& b) { return b; }
  static Int combine(const Int& a, const Int& piv, const Int& b, const Int& c, const Int& den) {
    return (a * piv - b * c) / den;
  }
  static bool ratio_less(const Int& a1, const Int& b1, const Int& a2, const Int& b2) {
    return a1 * b2 < a2 * b1;
  }
  static Rational to_rational(const Int& num, const Int& den) { return Rational(num, den); }
};

// Integer-scaled copy of the problem: every row (and the objective) is
// multiplied by the lcm of its denominators, which leaves the feasible set
// and the argmax unchanged (the optimum value is tracked separately by
// keeping the objective scale).
struct ScaledProblem {
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> rhs;
  std::vector<BigInt> objective;
  BigInt objective_scale{1};
};

ScaledProblem scale_problem(const LpProblem& p) {
  ScaledProblem out;
  auto lcm_of = [](const std::vector<Rational>& vals, const Rational& extra) {
    BigInt l{1};
    for (const Rational& v : vals) l = lcm(l, denominator(v));
    l = lcm(l, denominator(extra));
    return l;
  };
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    BigInt l = lcm_of(p.rows[i], p.rhs[i]);
    std::vector<BigInt> row;
    row.reserve(p.rows[i].size());
    for (const Rational& v : p.rows[i]) row.push_back(numerator(Rational(v * l)));
    out.rows.push_back(std::move(row));
    out.rhs.push_back(numerator(Rational(p.rhs[i] * l)));
  }
  BigInt l = lcm_of(p.objective, Rational(0));
  for (const Rational& v : p.objective) out.objective.push_back(numerator(Rational(v * l)));
  out.objective_scale = l;
  return out;
}

// Dense fraction-free simplex tableau. All true values are entry/den with
// den > 0 maintained by always pivoting on positive entries.
template <class Ops>
class Simplex {
  using Int = typename Ops::Int;

 public:
  Simplex(const ScaledProblem& sp, int nvars) : nvars_(nvars) {
    m_ = static_cast<int>(sp.rows.size());
    nslack_ = m_;
    // Artificials are created lazily for rows whose rhs is negative.
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i)
      if (sp.rhs[i] < 0) art_rows.push_back(i);
    nart_ = static_cast<int>(art_rows.size());
    width_ = nvars_ + nslack_ + nart_;
    rhs_col_ = width_;

    row_.assign(m_ + 1, std::vector<Int>(width_ + 1, Int(0)));
    alive_.assign(m_ + 1, true);
    basis_.assign(m_ + 1, -1);
    den_ = Int(1);

    int art = 0;
    for (int i = 0; i < m_; ++i) {
      const bool flip = sp.rhs[i] < 0;
      for (int j = 0; j < nvars_; ++j) {
        Int v = Ops::from_big(sp.rows[i][j]);
        row_[i + 1][j] = flip ? Int(-v) : v;
      }
      row_[i + 1][nvars_ + i] = flip ? Int(-1) : Int(1);  // slack
      row_[i + 1][rhs_col_] = Ops::from_big(flip ? BigInt(-sp.rhs[i]) : sp.rhs[i]);
      if (flip) {
        const int acol = nvars_ + nslack_ + art;
        row_[i + 1][acol] = Int(1);
        basis_[i + 1] = acol;
        ++art;
      } else {
        basis_[i + 1] = nvars_ + i;
      }
    }
  }

  // Phase one. Returns false when the problem is infeasible.
  bool find_feasible() {
    if (nart_ == 0) return true;
    // Priced-out phase-one objective: maximize -(sum of artificials).
    for (int j = 0; j <= rhs_col_; ++j) {
      Int acc(0);
      for (int i = 1; i <= m_; ++i)
        if (basis_[i] >= nvars_ + nslack_) acc = Int(acc - row_[i][j]);
      row_[0][j] = acc;
    }
    for (int j = nvars_ + nslack_; j < width_; ++j) row_[0][j] = Int(row_[0][j] + den_);
    optimize(width_);
    if (row_[0][rhs_col_] != 0) return false;  // max of -(sum a) < 0

    // Degenerate basic artificials: pivot them out or drop redundant rows.
    for (int i = 1; i <= m_; ++i) {
      if (!alive_[i] || basis_[i] < nvars_ + nslack_) continue;
      int col = -1;
      for (int j = 0; j < nvars_ + nslack_; ++j)
        if (row_[i][j] != 0) {
          col = j;
          break;
        }
      if (col < 0) {
        alive_[i] = false;  // redundant constraint
        continue;
      }
      if (row_[i][col] < 0)
        for (int j = 0; j <= rhs_col_; ++j) row_[i][j] = Int(-row_[i][j]);
      pivot(i, col);
    }
    return true;
  }

  void load_objective(const ScaledProblem& sp) {
    // Priced-out reduced costs: row0[j] = -c_j * den + sum_i c_basis[i] * row[i][j].
    std::vector<Int> c(width_ + 1, Int(0));
    for (int j = 0; j < nvars_; ++j) c[j] = Ops::from_big(sp.objective[j]);
    for (int j = 0; j <= rhs_col_; ++j) {
      Int acc = Int(-c[j] * den_);
      for (int i = 1; i <= m_; ++i) {
        if (!alive_[i]) continue;
        const int b = basis_[i];
        if (b < nvars_ && c[b] != 0) acc = Int(acc + c[b] * row_[i][j]);
      }
      row_[0][j] = acc;
    }
  }

  // Bland's rule; columns at or beyond entering_limit are barred from
  // entering (used to shut artificials out of phase two). Returns false on
  // unboundedness.
  bool optimize(int entering_limit) {
    const int limit = entering_limit;
    for (;;) {
      int s = -1;
      for (int j = 0; j < limit; ++j)
        if (row_[0][j] < 0) {
          s = j;
          break;
        }
      if (s < 0) return true;
      int r = -1;
      for (int i = 1; i <= m_; ++i) {
        if (!alive_[i] || row_[i][s] <= 0) continue;
        if (r < 0 ||
            Ops::ratio_less(row_[i][rhs_col_], row_[i][s], row_[r][rhs_col_], row_[r][s]) ||
            (!Ops::ratio_less(row_[r][rhs_col_], row_[r][s], row_[i][rhs_col_], row_[i][s]) &&
             basis_[i] < basis_[r]))
          r = i;
      }
      if (r < 0) return false;
      pivot(r, s);
    }
  }

  Rational objective_value() const { return Ops::to_rational(row_[0][rhs_col_], den_); }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(nvars_, Rational(0));
    for (int i = 1; i <= m_; ++i)
      if (alive_[i] && basis_[i] < nvars_)
        x[basis_[i]] = Ops::to_rational(row_[i][rhs_col_], den_);
    return x;
  }

 private:
  void pivot(int r, int s) {
    const Int piv = row_[r][s];
    for (int i = 0; i <= m_; ++i) {
      if (i == r || (i > 0 && !alive_[i])) continue;
      const Int factor = row_[i][s];
      if (factor == 0 && den_ == piv) continue;
      for (int j = 0; j <= rhs_col_; ++j)
        row_[i][j] = Ops::combine(row_[i][j], piv, factor, row_[r][j], den_);
    }
    den_ = piv;
    basis_[r] = s;
  }

  int nvars_, m_, nslack_, nart_, width_, rhs_col_;
  std::vector<std::vector<Int>> row_;
  std::vector<bool> alive_;
  std::vector<int> basis_;
  Int den_;
};

template <class Ops>
LpResult solve_with(const ScaledProblem& sp, const LpProblem& p, bool feasibility_only) {
  Simplex<Ops> tab(sp, p.nvars);
  LpResult res;
  if (!tab.find_feasible()) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  if (feasibility_only) {
    res.status = LpStatus::Optimal;
    res.x = tab.primal();
    return res;
  }
  tab.load_objective(sp);
  if (!tab.optimize(p.nvars + static_cast<int>(sp.rows.size()))) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = tab.objective_value() / Rational(sp.objective_scale);
  res.x = tab.primal();
  return res;
}

LpResult solve(const LpProblem& p, bool feasibility_only) {
  ScaledProblem sp = scale_problem(p);
  try {
    return solve_with<Ops64>(sp, p, feasibility_only);
  } catch (const Overflow64&) {
    return solve_with<OpsBig>(sp, p, feasibility_only);
  }
}

}  // namespace

LpResult lp_maximize(const LpProblem& p) { return solve(p, false); }

bool lp_feasible(const LpProblem& p) {
  return solve(p, true).status == LpStatus::Optimal;
}

}  // namespace gramvol
