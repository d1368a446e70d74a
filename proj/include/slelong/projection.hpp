#pragma once

// Nearest point in the convex hull of a finite point set (Wolfe's min-norm
// point algorithm on the translated set). Returns the projection with a
// variational-inequality certificate; refusal to converge is an error that
// carries the best iterate, never a silent wrong answer.

#include "slelong/core.hpp"

#include <cstddef>
#include <vector>

namespace slelong {

struct projection_result {
  Vec point;         // projection of x onto conv(points)
  double distance;   // |x - point|
  double residual;   // worst violation of <x - p, s - p> <= 0 over the points
  std::size_t iterations;
};

struct projection_error : error {
  projection_result best;
  projection_error(const std::string& msg, projection_result b)
      : error(msg), best(std::move(b)) {}
};

namespace detail {

// Solves the symmetric system for the affine min-norm point over the active
// set: minimize |sum mu_i w_i| with sum mu = 1. Gaussian elimination with
// partial pivoting on the bordered Gram matrix.
inline std::vector<double> affine_weights(const std::vector<Vec>& w,
                                          const std::vector<std::size_t>& act) {
  const std::size_t k = act.size();
  std::vector<std::vector<double>> M(k + 1, std::vector<double>(k + 2, 0.0));
  for (std::size_t j = 0; j < k; ++j) M[0][j] = 1.0;
  M[0][k + 1] = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    M[i + 1][k] = 1.0;
    for (std::size_t j = 0; j < k; ++j)
      M[i + 1][j] = dot(w[act[i]], w[act[j]]);
  }
  const std::size_t n = k + 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    if (M[col][col] == 0) throw error("projection: singular active-set system");
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = M[r][col] / M[col][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < n + 1; ++c) M[r][c] -= f * M[col][c];
    }
  }
  std::vector<double> mu(k);
  for (std::size_t i = 0; i < k; ++i) mu[i] = M[i + 1][n] / M[i + 1][i + 1];
  return mu;
}

}  // namespace detail

inline projection_result project_to_hull(const std::vector<Vec>& points, const Vec& x,
                                         double cert_tol = 1e-10) {
  if (points.empty()) throw error("projection: empty point set");
  const double scale = 1.0 + norm(x);
  const double tol = cert_tol * scale;

  std::vector<Vec> w(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) w[i] = sub(points[i], x);

  auto combine = [&](const std::vector<std::size_t>& act, const std::vector<double>& lam) {
    Vec p(x.size(), 0.0);
    for (std::size_t i = 0; i < act.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) p[j] += lam[i] * w[act[i]][j];
    return p;
  };
  auto finish = [&](const std::vector<std::size_t>& act, const std::vector<double>& lam,
                    std::size_t iters) {
    Vec p = combine(act, lam);
    double worst = -inf;
    for (const Vec& wi : w) worst = std::max(worst, dot(p, sub(p, wi)));
    projection_result r;
    r.point = add(x, p);
    r.distance = norm(p);
    r.residual = std::max(worst, 0.0);
    r.iterations = iters;
    return r;
  };

  std::size_t start = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (norm2(w[i]) < norm2(w[start])) start = i;
  std::vector<std::size_t> act{start};
  std::vector<double> lam{1.0};

  const std::size_t cap = 10 * points.size() * points.size() + 50;
  for (std::size_t iter = 0; iter < cap; ++iter) {
    Vec p = combine(act, lam);
    // Optimality: p is the min-norm point iff <p, w_i> >= |p|^2 for all i.
    double p2 = norm2(p);
    std::size_t enter = w.size();
    double worst = -tol;
    for (std::size_t i = 0; i < w.size(); ++i) {
      double g = p2 - dot(p, w[i]);
      if (g > worst) {
        worst = g;
        enter = i;
      }
    }
    if (enter == w.size()) return finish(act, lam, iter);
    bool already = false;
    for (std::size_t a : act) already = already || a == enter;
    if (already) {
      // Numerical stall: the violating point is active, so the minor cycle
      // cannot improve. Certify what we have or report failure.
      projection_result best = finish(act, lam, iter);
      if (best.residual <= tol * 10) return best;
      throw projection_error("projection stalled before certifying", best);
    }
    act.push_back(enter);
    lam.push_back(0.0);

    // Minor cycle: pull lambda toward the affine solution, dropping
    // components that hit zero, until the affine solution is feasible.
    for (;;) {
      std::vector<double> mu = detail::affine_weights(w, act);
      bool ok = true;
      for (double m : mu) ok = ok && m > -1e-12;
      if (ok) {
        lam = mu;
        for (double& l : lam) l = std::max(l, 0.0);
        double s = 0;
        for (double l : lam) s += l;
        for (double& l : lam) l /= s;
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < act.size(); ++i)
        if (mu[i] < lam[i])
          theta = std::min(theta, lam[i] / (lam[i] - mu[i]));
      for (std::size_t i = 0; i < act.size(); ++i)
        lam[i] += theta * (mu[i] - lam[i]);
      std::vector<std::size_t> act2;
      std::vector<double> lam2;
      for (std::size_t i = 0; i < act.size(); ++i)
        if (lam[i] > 1e-14) {
          act2.push_back(act[i]);
          lam2.push_back(lam[i]);
        }
      if (act2.empty()) {
        act2.push_back(act[0]);
        lam2.push_back(1.0);
      }
      act = std::move(act2);
      lam = std::move(lam2);
    }
  }

  projection_result best = finish(act, lam, cap);
  if (best.residual <= tol * 10) return best;
  throw projection_error("projection did not certify within iteration cap", best);
}

}  // namespace slelong
