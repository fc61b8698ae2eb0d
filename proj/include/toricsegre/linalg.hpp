#pragma once

// Exact integer and rational linear algebra at desk scale: unimodular
// echelon forms, Hermite normal form, rational elimination and a small
// exact simplex.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "toricsegre/rational.hpp"

namespace toricsegre {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix transpose(const IntMatrix& m, std::size_t ncols_if_empty = 0) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : ncols_if_empty;
  IntMatrix t(cols, IntVector(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), inner = b.size(), m = inner ? b[0].size() : 0;
  IntMatrix c(n, IntVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t content(const IntVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

/// Unimodular row reduction: returns (H, U) with H = U * M, U unimodular and
/// H in row echelon form (pivots positive, nonzero rows first).
inline std::pair<IntMatrix, IntMatrix> unimodular_row_echelon(IntMatrix h) {
  const std::size_t rows = h.size(), cols = rows ? h[0].size() : 0;
  IntMatrix u = identity_matrix(rows);
  auto row_op = [&](std::size_t target, std::size_t src, std::int64_t factor) {
    for (std::size_t j = 0; j < cols; ++j) h[target][j] -= factor * h[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[target][j] -= factor * u[src][j];
  };
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid down the column until one nonzero entry remains at pivot_row.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i)
        if (h[i][col] != 0 && (best == rows || std::abs(h[i][col]) < std::abs(h[best][col]))) best = i;
      if (best == rows) break;
      std::swap(h[pivot_row], h[best]);
      std::swap(u[pivot_row], u[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        row_op(i, pivot_row, h[i][col] / h[pivot_row][col]);
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) {
      for (auto& x : h[pivot_row]) x = -x;
      for (auto& x : u[pivot_row]) x = -x;
    }
    ++pivot_row;
  }
  return {h, u};
}

/// Row-style Hermite normal form (unique representative of the row lattice
/// under left multiplication by unimodular matrices). Zero rows are dropped.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = unimodular_row_echelon(m).first;
  while (!h.empty() && content(h.back()) == 0) h.pop_back();
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::size_t col = 0;
    while (h[i][col] == 0) ++col;
    const std::int64_t p = h[i][col];
    for (std::size_t k = 0; k < i; ++k) {
      std::int64_t q = h[k][col] / p;
      if (h[k][col] - q * p < 0) --q;
      if (q != 0)
        for (std::size_t j = 0; j < h[k].size(); ++j) h[k][j] -= q * h[i][j];
    }
  }
  return h;
}

inline std::int64_t determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix r(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = make_rational(a[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && r[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(r[p], r[c]);
      det = -det;
    }
    det *= r[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = r[i][c] / r[c][c];
      for (std::size_t j = c; j < n; ++j) r[i][j] -= f * r[c][j];
    }
  }
  return to_int64(det, ErrorCode::Internal);
}

/// Gauss-Jordan over Q. Returns the reduced row echelon form and pivot columns.
inline std::pair<RatMatrix, std::vector<std::size_t>> rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

/// Solves a * x = b. Returns nullopt if inconsistent; free variables are 0.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b, std::size_t nunknowns) {
  RatMatrix aug(a.size(), RatVector(nunknowns + 1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < nunknowns; ++j) aug[i][j] = a[i][j];
    aug[i][nunknowns] = b[i];
  }
  auto [red, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == nunknowns) return std::nullopt;
  RatVector x(nunknowns, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red[i][nunknowns];
  return x;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::int64_t x : m[i]) r[i].push_back(make_rational(x));
  return r;
}

/// Minimizes c.y subject to a * y >= b over y in Q^n (y free), by a dense
/// two-phase simplex with Bland's rule. Returns nullopt when infeasible; when
/// the objective is unbounded below a feasible point is returned.
inline std::optional<RatVector> lp_minimize(const RatVector& c, const RatMatrix& a, const RatVector& b) {
  const std::size_t m = a.size(), n = c.size();
  // Columns: y+ (n), y- (n), surplus (m), artificial (m), then rhs.
  const std::size_t nv = 2 * n + 2 * m, rhs = nv;
  RatMatrix t(m, RatVector(nv + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sgn = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = sgn * a[i][j];
      t[i][n + j] = -sgn * a[i][j];
    }
    t[i][2 * n + i] = -sgn;
    t[i][2 * n + m + i] = 1;
    t[i][rhs] = sgn * b[i];
    basis[i] = 2 * n + m + i;
  }

  auto pivot = [&](std::size_t row, std::size_t col) {
    const Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (std::size_t j = 0; j <= nv; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  };

  // Returns false if unbounded.
  auto run = [&](const RatVector& cost, std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= cost[basis[i]] * t[i][j];
        if (reduced < 0) enter = j;
      }
      if (enter == allowed) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][rhs] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  };

  RatVector phase1(nv, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[2 * n + m + i] = 1;
  run(phase1, nv);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= 2 * n + m) infeasibility += t[i][rhs];
  if (infeasibility != 0) return std::nullopt;
  // Drive remaining (zero-valued) artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < 2 * n + m) continue;
    for (std::size_t j = 0; j < 2 * n + m; ++j)
      if (t[i][j] != 0) {
        pivot(i, j);
        break;
      }
  }
  RatVector phase2(nv, 0);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = c[j];
    phase2[n + j] = -c[j];
  }
  run(phase2, 2 * n + m);

  RatVector y(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) y[basis[i]] += t[i][rhs];
    else if (basis[i] < 2 * n) y[basis[i] - n] -= t[i][rhs];
  }
  return y;
}

}  // namespace toricsegre
