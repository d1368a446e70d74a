#pragma once

// Cones of directions used by the hull and integral machinery. The cone from
// the main estimate is rotation-symmetric about the all-ones axis with
// half-angle habitually past pi/2, so it is stored as axis + angle, never as a
// ray list. 2D work reduces cones to closed angular arcs; triangulation
// splits polyhedral cones into simplicial pieces for the exponential integral.

#include "slelong/core.hpp"
#include "slelong/fan.hpp"
#include "slelong/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace slelong {

// {xi : <ones, xi> >= cos(half_angle) * sqrt(n) * |xi|}. Non-convex once
// half_angle exceeds pi/2; half_angle == pi means all of R^n.
struct AngularCone {
  int dim = 0;
  double half_angle = 0;

  bool contains(const Vec& xi, double tol = 1e-12) const {
    double r = norm(xi);
    if (r == 0) return true;
    double lhs = 0;
    for (double v : xi) lhs += v;
    return lhs >= std::cos(half_angle) * std::sqrt(static_cast<double>(dim)) * r -
                      tol * (1 + r);
  }
};

// Half-angle arccos(-(d_m - gamma)/sqrt(n)), clamped to pi when the gap
// exceeds sqrt(n). The hypothesis gamma < d_m is enforced here.
inline AngularCone theorem_cone(int dim, double d_m, double gamma) {
  if (dim < 1) throw input_error("cone dimension must be >= 1");
  if (!(gamma >= 0) || !std::isfinite(gamma))
    throw input_error("gamma must be finite and >= 0");
  if (!(gamma < d_m))
    throw input_error("hypothesis gamma < d_m violated (gamma=" + format_double(gamma) +
                      ", d_m=" + format_double(d_m) + ")");
  double c = -(d_m - gamma) / std::sqrt(static_cast<double>(dim));
  AngularCone g;
  g.dim = dim;
  g.half_angle = c <= -1.0 ? pi : std::acos(c);
  return g;
}

inline bool cone_contains(const AngularCone& g, const Vec& xi, double tol = 1e-12) {
  return g.contains(xi, tol);
}

// Closed arcs of directions on the circle, each [lo, hi] with hi - lo <= 2 pi.
struct DirectionArcs {
  bool full_circle = false;
  std::vector<std::pair<double, double>> arcs;  // ignored when full_circle

  static DirectionArcs from_angular(const AngularCone& g) {
    if (g.dim != 2) throw error("arc form needs a 2D cone");
    DirectionArcs a;
    if (g.half_angle >= pi - 1e-15) {
      a.full_circle = true;
      return a;
    }
    double center = pi / 4;  // axis (1,1)
    a.arcs.push_back({center - g.half_angle, center + g.half_angle});
    return a;
  }

  // Rays spanning at most a closed half-plane reduce to their enclosing arc
  // (largest-gap argument). Wider configurations have no arc form.
  static DirectionArcs from_rays(const std::vector<Vec>& rays) {
    if (rays.empty()) throw input_error("cone with no rays");
    std::vector<double> ang;
    for (const Vec& r : rays) {
      if (r.size() != 2) throw error("arc form needs 2D rays");
      if (norm(r) == 0) throw input_error("zero ray");
      ang.push_back(std::atan2(r[1], r[0]));
    }
    std::sort(ang.begin(), ang.end());
    double best_gap = 2 * pi - (ang.back() - ang.front());
    std::size_t gap_after = ang.size() - 1;
    for (std::size_t i = 0; i + 1 < ang.size(); ++i) {
      double gap = ang[i + 1] - ang[i];
      if (gap > best_gap) {
        best_gap = gap;
        gap_after = i;
      }
    }
    double width = 2 * pi - best_gap;
    if (width > pi + 1e-9)
      throw input_error("polyhedral cone spans more than a half-plane; no arc form");
    DirectionArcs a;
    if (width < 1e-15) {
      // Single direction (all rays parallel).
      a.arcs.push_back({ang.front(), ang.front()});
      return a;
    }
    double lo = gap_after + 1 == ang.size() ? ang.front() : ang[gap_after + 1] - 2 * pi;
    a.arcs.push_back({lo, lo + width});
    return a;
  }
};

// Arc pieces labeled with the fan cell they lie in, each at most max_width
// wide. Endpoint directions of such pieces dominate a sub-arc of supporting
// half-planes only when the piece is strictly narrower than pi; callers that
// need that property pass max_width just under pi.
struct SubArc {
  double lo = 0, hi = 0;
  std::size_t cell = 0;
};

inline std::vector<SubArc> decompose_arcs(const DirectionArcs& dirs, const NormalFan& fan,
                                          double max_width = pi - 1e-9) {
  std::vector<std::pair<double, double>> base;
  if (dirs.full_circle) {
    base.push_back({-pi, pi});
  } else {
    base = dirs.arcs;
  }
  std::vector<SubArc> out;
  for (auto [alo, ahi] : base) {
    for (std::size_t ci = 0; ci < fan.cells.size(); ++ci) {
      const FanCell& cell = fan.cells[ci];
      double clo = cell.angle_lo, chi = cell.angle_hi;
      for (int k = -2; k <= 2; ++k) {
        double lo = std::max(alo, clo + 2 * pi * k);
        double hi = std::min(ahi, chi + 2 * pi * k);
        if (hi - lo > 1e-14) {
          int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_width)));
          for (int p = 0; p < pieces; ++p) {
            SubArc s;
            s.lo = lo + (hi - lo) * p / pieces;
            s.hi = lo + (hi - lo) * (p + 1) / pieces;
            s.cell = ci;
            out.push_back(s);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SubArc& a, const SubArc& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.cell < b.cell;
  });
  return out;
}

namespace detail {

inline int double_rank(std::vector<Vec> rows, double tol = 1e-9) {
  int rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::size_t rrow = 0;
  for (std::size_t col = 0; col < n && rrow < rows.size(); ++col) {
    std::size_t piv = rrow;
    for (std::size_t r = rrow + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
    if (std::abs(rows[piv][col]) < tol) continue;
    std::swap(rows[rrow], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rrow) continue;
      double f = rows[r][col] / rows[rrow][col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[rrow][c];
    }
    ++rrow;
    ++rank;
  }
  return rank;
}

// 0 in conv(points) as an LP feasibility problem (floating point).
inline bool contains_origin_combination(const std::vector<Vec>& pts) {
  const std::size_t k = pts.size();
  const std::size_t n = pts[0].size();
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<double> row(k), neg(k);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = pts[i][d];
      neg[i] = -pts[i][d];
    }
    A.push_back(row);
    b.push_back(1e-9);
    A.push_back(neg);
    b.push_back(1e-9);
  }
  A.push_back(std::vector<double>(k, 1.0));
  b.push_back(1.0);
  A.push_back(std::vector<double>(k, -1.0));
  b.push_back(-1.0);
  std::vector<double> lo(k, 0.0), hi(k, 1.0);
  return lp_feasible(A, b, lo, hi);
}

// Direction w with <w, r> > 0 for every ray; exists iff the cone is pointed.
inline Vec dual_interior_direction(const std::vector<Vec>& rays) {
  const std::size_t n = rays[0].size();
  Vec w(n, 0.0);
  for (const Vec& r : rays) w = add(w, normalized(r));
  bool ok = norm(w) > 0;
  if (ok)
    for (const Vec& r : rays) ok = ok && dot(w, normalized(r)) > 1e-7;
  if (ok) return w;

  // LP: maximize t with <w, r_hat> >= t, w in [-1,1]^n, t in [0,1].
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (const Vec& r : rays) {
    Vec rh = normalized(r);
    std::vector<double> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = -rh[j];
    row[n] = 1.0;
    A.push_back(row);
    b.push_back(0.0);
  }
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<double> lo(n + 1, -1.0), hi(n + 1, 1.0);
  lo[n] = 0.0;
  auto res = solve_lp(A, b, c, lo, hi);
  if (res.status != lp_status::optimal || res.value <= 1e-10)
    throw error("no strict dual direction; cone is not pointed");
  return Vec(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(n));
}

// Monotone chain hull of 2D points; returns indices in CCW order.
inline std::vector<std::size_t> hull_indices_2d(const std::vector<Vec>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<std::size_t> h;
  for (std::size_t i : idx) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), i) <= 1e-12) h.pop_back();
    h.push_back(i);
  }
  std::size_t lower = h.size() + 1;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 1e-12)
      h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  return h;
}

}  // namespace detail

struct SimplicialCone {
  std::vector<Vec> rays;  // exactly dim linearly independent rays
};

// Splits a cone into simplicial pieces with disjoint interiors. Cones of
// deficient dimension return no pieces (they carry no volume); cones
// containing a line are rejected. General ray lists are handled through
// dimension 3; higher dimensions must already be simplicial.
inline std::vector<SimplicialCone> triangulate(const PolyhedralCone& cone) {
  const int n = cone.dim;
  if (cone.full_space) throw error("cone is not pointed (full space)");
  if (cone.rays.empty()) return {};
  std::vector<Vec> rays;
  for (const Vec& r : cone.rays) {
    if (static_cast<int>(r.size()) != n) throw error("ray arity mismatch");
    if (norm(r) > 0) rays.push_back(normalized(r));
  }
  if (rays.empty()) return {};
  std::vector<Vec> dedup;
  for (const Vec& r : rays) {
    bool seen = false;
    for (const Vec& d : dedup) seen = seen || norm(sub(d, r)) < 1e-10;
    if (!seen) dedup.push_back(r);
  }
  rays = dedup;

  if (detail::double_rank(rays) < n) return {};
  if (detail::contains_origin_combination(rays))
    throw error("cone is not pointed (contains a line)");

  if (n == 1) return {SimplicialCone{{rays[0]}}};

  if (n == 2) {
    Vec w = detail::dual_interior_direction(rays);
    auto signed_angle = [&](const Vec& r) {
      return std::atan2(w[0] * r[1] - w[1] * r[0], w[0] * r[0] + w[1] * r[1]);
    };
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < rays.size(); ++i) {
      if (signed_angle(rays[i]) < signed_angle(rays[lo])) lo = i;
      if (signed_angle(rays[i]) > signed_angle(rays[hi])) hi = i;
    }
    return {SimplicialCone{{rays[lo], rays[hi]}}};
  }

  if (n == 3) {
    Vec w = normalized(detail::dual_interior_direction(rays));
    // Orthonormal basis of the cross-section plane.
    Vec b1 = std::abs(w[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    b1 = sub(b1, scaled(w, dot(b1, w)));
    b1 = normalized(b1);
    Vec b2{w[1] * b1[2] - w[2] * b1[1], w[2] * b1[0] - w[0] * b1[2],
           w[0] * b1[1] - w[1] * b1[0]};
    std::vector<Vec> flat;
    for (const Vec& r : rays) {
      double h = dot(w, r);
      Vec p = scaled(r, 1.0 / h);
      flat.push_back({dot(p, b1), dot(p, b2)});
    }
    std::vector<std::size_t> hull = detail::hull_indices_2d(flat);
    if (hull.size() < 3) return {};  // numerically flat; rank check should have caught it
    std::vector<SimplicialCone> out;
    for (std::size_t i = 1; i + 1 < hull.size(); ++i)
      out.push_back(SimplicialCone{{rays[hull[0]], rays[hull[i]], rays[hull[i + 1]]}});
    return out;
  }

  if (static_cast<int>(rays.size()) == n) return {SimplicialCone{rays}};
  throw error("triangulation of non-simplicial cones is supported up to dimension 3");
}

}  // namespace slelong
