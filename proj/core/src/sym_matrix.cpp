#include "gramvol/sym_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gramvol {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text) {
  auto is_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string t = text;
  bool negative = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    negative = t[0] == '-';
    t = t.substr(1);
  }
  std::string num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

RationalSymMatrix::RationalSymMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

RationalSymMatrix RationalSymMatrix::identity(int n) {
  RationalSymMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, 1);
  return m;
}

std::size_t RationalSymMatrix::index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

void RationalSymMatrix::set(int i, int j, const Rational& value) {
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

bool RationalSymMatrix::is_zero_row(int i) const {
  for (int j = 1; j <= n_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

Signature signature(const RationalSymMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i + 1, j + 1);

  std::vector<int> active;
  active.reserve(n);
  for (int i = 0; i < n; ++i) active.push_back(i);

  Signature s;
  while (!active.empty()) {
    // 1x1 pivot on the first nonzero active diagonal entry.
    int pivot = -1;
    for (int idx : active)
      if (a[idx][idx] != 0) {
        pivot = idx;
        break;
      }
    if (pivot >= 0) {
      const Rational d = a[pivot][pivot];
      if (d > 0)
        ++s.pos;
      else
        ++s.neg;
      std::erase(active, pivot);
      for (std::size_t x = 0; x < active.size(); ++x)
        for (std::size_t y = x; y < active.size(); ++y) {
          const int i = active[x], j = active[y];
          Rational v = a[i][j] - a[pivot][i] * a[pivot][j] / d;
          a[i][j] = v;
          a[j][i] = v;
        }
      continue;
    }

    // Zero active diagonal: pivot on an off-diagonal entry. The 2x2 block
    // [[0, c], [c, 0]] has inertia (1, 1).
    int pi = -1, pj = -1;
    for (std::size_t x = 0; x < active.size() && pi < 0; ++x)
      for (std::size_t y = x + 1; y < active.size(); ++y)
        if (a[active[x]][active[y]] != 0) {
          pi = active[x];
          pj = active[y];
          break;
        }
    if (pi < 0) {
      // The remaining block vanishes entirely.
      s.nul += static_cast<int>(active.size());
      break;
    }
    const Rational c = a[pi][pj];
    ++s.pos;
    ++s.neg;
    std::erase(active, pi);
    std::erase(active, pj);
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = x; y < active.size(); ++y) {
        const int i = active[x], j = active[y];
        Rational v = a[i][j] - (a[pi][i] * a[pj][j] + a[pj][i] * a[pi][j]) / c;
        a[i][j] = v;
        a[j][i] = v;
      }
  }
  return s;
}

namespace {

// Elimination on a full (non-symmetric) copy; returns pivot product sign
// bookkeeping through the out-parameters.
struct Elimination {
  Rational det;
  int rank = 0;
};

Elimination eliminate(const RationalSymMatrix& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i + 1, j + 1);

  Elimination out;
  out.det = 1;
  int sign = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) {
      out.det = 0;
      continue;
    }
    if (p != row) {
      std::swap(a[p], a[row]);
      sign = -sign;
    }
    const Rational piv = a[row][col];
    out.det *= piv;
    ++out.rank;
    for (int r = row + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / piv;
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
    }
    ++row;
  }
  if (out.rank < n) out.det = 0;
  if (sign < 0) out.det = -out.det;
  return out;
}

}  // namespace

Rational determinant(const RationalSymMatrix& m) { return eliminate(m).det; }

int rank(const RationalSymMatrix& m) { return eliminate(m).rank; }

RationalSymMatrix cycle_matrix(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  if (n < 3) throw std::invalid_argument("cycle_matrix requires at least 3 weights");
  for (const Rational& w : weights)
    if (w >= 0) throw std::invalid_argument("cycle_matrix weights must be negative");
  RationalSymMatrix m(n);
  for (int k = 0; k < n; ++k) {
    const int i = k + 1;
    const int j = (k + 1) % n + 1;
    m.set(i, j, weights[k]);
  }
  return m;
}

RationalSymMatrix direct_sum(const RationalSymMatrix& a, const RationalSymMatrix& b) {
  const int na = a.size(), nb = b.size();
  RationalSymMatrix m(na + nb);
  for (int i = 1; i <= na; ++i)
    for (int j = i; j <= na; ++j) m.set(i, j, a.at(i, j));
  for (int i = 1; i <= nb; ++i)
    for (int j = i; j <= nb; ++j) m.set(na + i, na + j, b.at(i, j));
  return m;
}

RationalSymMatrix rescale_by_signs(const RationalSymMatrix& m, const std::vector<int>& signs) {
  const int n = m.size();
  if (static_cast<int>(signs.size()) != n + 1)
    throw std::invalid_argument("sign vector must have n+1 entries (1-based)");
  RationalSymMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      out.set(i, j, Rational(signs[i] * signs[j]) * m.at(i, j));
  return out;
}

RationalSymMatrix rescale_by_diagonal(const RationalSymMatrix& m, const std::vector<Rational>& d) {
  const int n = m.size();
  if (static_cast<int>(d.size()) != n + 1)
    throw std::invalid_argument("diagonal must have n+1 entries (1-based)");
  for (int i = 1; i <= n; ++i)
    if (d[i] == 0) throw std::invalid_argument("diagonal rescaling must be invertible");
  RationalSymMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.set(i, j, d[i] * d[j] * m.at(i, j));
  return out;
}

}  // namespace gramvol
