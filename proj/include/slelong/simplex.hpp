#pragma once

// Dense two-phase simplex with Bland's rule, templated over the scalar so the
// same code runs in floating point (piecewise-linear face maximization) and in
// exact rationals (membership feasibility). Problems here are tiny (tens of
// rows), so a dense tableau is the right tool.

#include "slelong/core.hpp"

#include <cstddef>
#include <vector>

namespace slelong {

template <class T>
struct lp_tolerance {
  static T value() { return T(0); }
};
template <>
struct lp_tolerance<double> {
  static double value() { return 1e-11; }
};

enum class lp_status { optimal, infeasible, unbounded };

template <class T>
struct lp_result {
  lp_status status = lp_status::infeasible;
  T value{};
  std::vector<T> x;
};

// maximize c.y subject to A y <= b and lo <= y <= hi (all bounds finite).
template <class T>
lp_result<T> solve_lp(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                      const std::vector<T>& c, const std::vector<T>& lo,
                      const std::vector<T>& hi) {
  const std::size_t n = c.size();
  if (lo.size() != n || hi.size() != n) throw error("lp: bound size mismatch");
  for (std::size_t j = 0; j < n; ++j)
    if (hi[j] < lo[j]) {
      lp_result<T> r;
      r.status = lp_status::infeasible;
      return r;
    }
  const T tol = lp_tolerance<T>::value();

  // Shift to x = y - lo >= 0; upper bounds become extra rows.
  std::vector<std::vector<T>> rows = A;
  std::vector<T> rhs = b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw error("lp: row size mismatch");
    T shift{};
    for (std::size_t j = 0; j < n; ++j) shift += rows[i][j] * lo[j];
    rhs[i] -= shift;
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> row(n, T(0));
    row[j] = T(1);
    rows.push_back(row);
    rhs.push_back(hi[j] - lo[j]);
  }

  const std::size_t m = rows.size();
  std::size_t art = 0;
  std::vector<bool> needs_art(m, false);
  for (std::size_t i = 0; i < m; ++i)
    if (rhs[i] < T(0)) {
      needs_art[i] = true;
      ++art;
    }

  // Columns: [x | slacks | artificials | rhs].
  const std::size_t cols = n + m + art + 1;
  std::vector<std::vector<T>> tab(m, std::vector<T>(cols, T(0)));
  std::vector<std::size_t> basis(m);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = rows[i][j];
    tab[i][n + i] = T(1);
    tab[i][cols - 1] = rhs[i];
    if (needs_art[i]) {
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] = -tab[i][j];
      tab[i][next_art] = T(1);
      basis[i] = next_art++;
    } else {
      basis[i] = n + i;
    }
  }

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    T p = tab[pr][pc];
    for (std::size_t j = 0; j < cols; ++j) tab[pr][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr) continue;
      T f = tab[i][pc];
      if (f == T(0)) continue;
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[pr][j];
    }
    basis[pr] = pc;
  };

  // Bland: entering = lowest-index column with reduced cost above tol,
  // leaving = lowest basis index among ratio-test ties.
  auto run_simplex = [&](const std::vector<T>& cost, std::size_t ncols) -> lp_status {
    for (;;) {
      std::vector<T> red = cost;
      for (std::size_t i = 0; i < m; ++i) {
        T cb = cost[basis[i]];
        if (cb == T(0)) continue;
        for (std::size_t j = 0; j < ncols; ++j) red[j] -= cb * tab[i][j];
      }
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (red[j] > tol) {
          enter = j;
          break;
        }
      if (enter == ncols) return lp_status::optimal;

      std::size_t leave = m;
      T best{};
      for (std::size_t i = 0; i < m; ++i) {
        if (tab[i][enter] > tol) {
          T ratio = tab[i][cols - 1] / tab[i][enter];
          if (leave == m || ratio < best ||
              (ratio == best && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave == m) return lp_status::unbounded;
      pivot(leave, enter);
    }
  };

  if (art > 0) {
    std::vector<T> phase1(cols, T(0));
    for (std::size_t j = n + m; j < cols - 1; ++j) phase1[j] = T(-1);
    lp_status st = run_simplex(phase1, cols - 1);
    (void)st;  // phase 1 is always bounded
    T infeas{};
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n + m) infeas += tab[i][cols - 1];
    if (infeas > tol) {
      lp_result<T> r;
      r.status = lp_status::infeasible;
      return r;
    }
    // Drive leftover (degenerate) artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n + m) continue;
      std::size_t pc = n + m;
      for (std::size_t j = 0; j < n + m; ++j)
        if (!(tab[i][j] == T(0))) {
          pc = j;
          break;
        }
      if (pc < n + m) pivot(i, pc);
      // Otherwise the row is all-zero up to artificials: redundant, harmless.
    }
  }

  std::vector<T> phase2(cols, T(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  lp_status st = run_simplex(phase2, n + m);
  lp_result<T> r;
  r.status = st;
  if (st != lp_status::optimal) return r;

  std::vector<T> x(n, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][cols - 1];
  r.x.resize(n);
  r.value = T(0);
  for (std::size_t j = 0; j < n; ++j) {
    r.x[j] = x[j] + lo[j];
    r.value += c[j] * r.x[j];
  }
  return r;
}

// Feasibility of {A y <= b, lo <= y <= hi}.
template <class T>
bool lp_feasible(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                 const std::vector<T>& lo, const std::vector<T>& hi) {
  std::vector<T> c(lo.size(), T(0));
  return solve_lp(A, b, c, lo, hi).status == lp_status::optimal;
}

}  // namespace slelong
