#pragma once

// Normal fan of a polytope: for every vertex s, the cone of directions whose
// support maximum is attained at s. In 2D the cells are angular intervals read
// off the edge ring; in higher dimension rays come from nullspaces of
// (n-1)-subsets of the inequality normals {v - s}. Cells of a polytope of
// deficient dimension are non-pointed and flagged as such.

#include "slelong/core.hpp"
#include "slelong/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace slelong {

struct PolyhedralCone {
  int dim = 0;
  std::vector<Vec> rays;
  bool full_space = false;
};

struct FanCell {
  std::size_t vertex = 0;   // index into the polytope vertex list
  PolyhedralCone cone;
  bool pointed = true;
  // 2D only: cell = {r (cos t, sin t) : t in [angle_lo, angle_hi], r >= 0},
  // angle_lo in (-pi, pi], angle_hi = angle_lo + width, width in (0, 2 pi].
  double angle_lo = 0;
  double angle_hi = 0;
};

struct NormalFan {
  Polytope S;
  std::vector<FanCell> cells;

  // 2D: index of the cell whose angular interval contains direction t.
  std::size_t cell_at_angle(double t) const {
    if (S.dim() != 2) throw error("cell_at_angle is 2D only");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      double lo = cells[i].angle_lo, hi = cells[i].angle_hi;
      double u = t;
      while (u < lo) u += 2 * pi;
      while (u - 2 * pi >= lo) u -= 2 * pi;
      if (u <= hi + 1e-12) return i;
    }
    throw error("direction not covered by fan cells");
  }
};

namespace detail {

inline double angle_of(const Vec& u) { return std::atan2(u[1], u[0]); }

// Exact rank of rational row vectors by Gaussian elimination.
inline int rational_rank(std::vector<RVec> rows) {
  int rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  std::size_t rrow = 0;
  for (std::size_t col = 0; col < ncols && rrow < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t r = rrow; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rrow], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rrow || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rrow][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rrow][c];
    }
    ++rrow;
    ++rank;
  }
  return rank;
}

// One-dimensional nullspace of (n-1) rows, if the rows have full rank n-1.
inline bool nullspace_direction(std::vector<Vec> rows, Vec& out) {
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t rrow = 0;
  for (std::size_t col = 0; col < n && rrow < rows.size(); ++col) {
    std::size_t piv = rrow;
    for (std::size_t r = rrow + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
    if (std::abs(rows[piv][col]) < 1e-12) continue;
    std::swap(rows[rrow], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rrow) continue;
      double f = rows[r][col] / rows[rrow][col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[rrow][c];
    }
    pivot_col.push_back(col);
    ++rrow;
  }
  if (pivot_col.size() != n - 1) return false;
  std::size_t free_col = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_col = c;
  out.assign(n, 0.0);
  out[free_col] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    out[pivot_col[r]] = -rows[r][free_col] / rows[r][pivot_col[r]];
  double nn = norm(out);
  for (double& v : out) v /= nn;
  return true;
}

}  // namespace detail

inline NormalFan normal_fan(const Polytope& S) {
  NormalFan fan;
  fan.S = S;
  const int n = S.dim();
  const auto& V = S.vertices();
  const auto& Vd = S.vertices_d();

  if (V.size() == 1) {
    FanCell cell;
    cell.vertex = 0;
    cell.cone.dim = n;
    cell.cone.full_space = true;
    for (int j = 0; j < n; ++j) {
      cell.cone.rays.push_back(unit(n, j));
      Vec m = unit(n, j);
      m[static_cast<std::size_t>(j)] = -1;
      cell.cone.rays.push_back(m);
    }
    cell.pointed = false;
    cell.angle_lo = -pi;
    cell.angle_hi = pi;
    fan.cells.push_back(cell);
    return fan;
  }

  if (n == 1) {
    // Vertices sorted ascending; extremes are 0 and the right endpoint.
    FanCell left, right;
    left.vertex = 0;
    left.cone = {1, {Vec{-1.0}}, false};
    right.vertex = V.size() - 1;
    right.cone = {1, {Vec{1.0}}, false};
    fan.cells = {left, right};
    return fan;
  }

  if (n == 2 && V.size() == 2) {
    // Segment: two half-plane cells split by the edge direction.
    Vec d = normalized(sub(Vd[1], Vd[0]));
    Vec dp{-d[1], d[0]};
    Vec dm{d[1], -d[0]};
    FanCell far_cell, near_cell;
    far_cell.vertex = 1;
    far_cell.cone = {2, {dp, dm, d}, false};
    far_cell.pointed = false;
    far_cell.angle_lo = detail::angle_of(d) - pi / 2;
    far_cell.angle_hi = far_cell.angle_lo + pi;
    near_cell.vertex = 0;
    near_cell.cone = {2, {dp, dm, scaled(d, -1.0)}, false};
    near_cell.pointed = false;
    near_cell.angle_lo = detail::angle_of(scaled(d, -1.0)) - pi / 2;
    near_cell.angle_hi = near_cell.angle_lo + pi;
    for (FanCell* c : {&far_cell, &near_cell}) {
      if (c->angle_lo <= -pi) {
        c->angle_lo += 2 * pi;
        c->angle_hi += 2 * pi;
      }
    }
    fan.cells = {far_cell, near_cell};
    return fan;
  }

  if (n == 2) {
    const auto& ring = S.ccw_ring();
    const std::size_t k = ring.size();
    // Outward edge normals, exact then narrowed to double.
    std::vector<Vec> normals(k);
    std::vector<double> ang(k);
    for (std::size_t i = 0; i < k; ++i) {
      const RVec& a = V[ring[i]];
      const RVec& b = V[ring[(i + 1) % k]];
      RVec d{b[0] - a[0], b[1] - a[1]};
      Vec u = to_double(RVec{d[1], -d[0]});
      normals[i] = normalized(u);
      ang[i] = detail::angle_of(normals[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t prev = (i + k - 1) % k;
      FanCell cell;
      cell.vertex = ring[i];
      cell.cone.dim = 2;
      cell.cone.rays = {normals[prev], normals[i]};
      cell.angle_lo = ang[prev];
      double width = ang[i] - ang[prev];
      while (width <= 0) width += 2 * pi;
      cell.angle_hi = cell.angle_lo + width;
      fan.cells.push_back(cell);
    }
    std::sort(fan.cells.begin(), fan.cells.end(),
              [](const FanCell& a, const FanCell& b) { return a.vertex < b.vertex; });
    return fan;
  }

  // n >= 3. Exact dimension check: vertices include 0, so the affine hull is
  // the linear span of the vertex set.
  std::vector<RVec> span_rows(V.begin(), V.end());
  bool full_dim = detail::rational_rank(span_rows) == n;

  for (std::size_t s = 0; s < V.size(); ++s) {
    FanCell cell;
    cell.vertex = s;
    cell.cone.dim = n;
    if (!full_dim) {
      cell.pointed = false;
      fan.cells.push_back(cell);
      continue;
    }
    // H-representation normals of the cell: a_v = v - s.
    std::vector<Vec> normals;
    for (std::size_t v = 0; v < V.size(); ++v)
      if (v != s) normals.push_back(sub(Vd[v], Vd[s]));
    double scale = 0;
    for (const Vec& a : normals) scale = std::max(scale, norm(a));
    const double tol = 1e-9 * (1 + scale);

    auto feasible = [&](const Vec& d) {
      for (const Vec& a : normals)
        if (dot(a, d) > tol) return false;
      return true;
    };

    std::vector<Vec> rays;
    auto push_ray = [&](const Vec& d) {
      for (const Vec& r : rays)
        if (norm(sub(r, d)) < 1e-7) return;
      rays.push_back(d);
    };
    const std::size_t rcount = normals.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n - 1));
    // Enumerate (n-1)-subsets of the normals.
    std::vector<std::size_t> comb(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < comb.size(); ++i) comb[i] = i;
    if (rcount >= comb.size()) {
      for (;;) {
        std::vector<Vec> rows;
        for (std::size_t i : comb) rows.push_back(normals[i]);
        Vec d;
        if (detail::nullspace_direction(rows, d)) {
          if (feasible(d)) push_ray(d);
          Vec nd = scaled(d, -1.0);
          if (feasible(nd)) push_ray(nd);
        }
        std::size_t j = comb.size();
        while (j > 0 && comb[j - 1] == rcount - comb.size() + (j - 1)) --j;
        if (j == 0) break;
        ++comb[j - 1];
        for (std::size_t i = j; i < comb.size(); ++i) comb[i] = comb[i - 1] + 1;
      }
    }
    cell.cone.rays = rays;
    cell.pointed = true;  // full-dimensional S forces pointed cells
    fan.cells.push_back(cell);
  }
  return fan;
}

}  // namespace slelong
