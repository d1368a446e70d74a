#pragma once

// Convex polytopes in the closed positive orthant, stored as an exact rational
// vertex list (V-representation). The origin is required to be a vertex: for a
// compact subset of the orthant that contains 0, the origin is automatically an
// extreme point, so a reduced vertex list must include it.

#include "slelong/core.hpp"
#include "slelong/projection.hpp"
#include "slelong/simplex.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace slelong {

class Polytope {
 public:
  static Polytope from_vertices(int dim, std::vector<RVec> vertices) {
    if (dim < 1) throw input_error("polytope dimension must be >= 1");
    if (vertices.empty()) throw input_error("polytope needs at least one vertex");
    for (const RVec& v : vertices) {
      if (static_cast<int>(v.size()) != dim)
        throw input_error("vertex arity does not match dimension");
      for (const Rational& c : v)
        if (c < 0) throw input_error("vertex outside the positive orthant");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (vertices[i] == vertices[j])
          throw input_error("duplicate vertex in list");

    bool has_origin = false;
    for (const RVec& v : vertices) {
      bool zero = true;
      for (const Rational& c : v) zero = zero && c == 0;
      has_origin = has_origin || zero;
    }
    if (!has_origin)
      throw input_error("origin must be a vertex (compact subset of the orthant containing 0)");

    Polytope p;
    p.dim_ = dim;
    p.verts_ = std::move(vertices);
    p.sort_vertices();
    for (std::size_t i = 0; i < p.verts_.size(); ++i)
      if (p.verts_.size() > 1 && p.in_hull_of_others(i))
        throw input_error("vertex " + std::to_string(i) + " is not extreme");
    p.rebuild_cache();
    return p;
  }

  // Drops non-extreme points, then validates. Convenience for generators.
  static Polytope hull_of(int dim, std::vector<RVec> points) {
    if (points.empty()) throw input_error("empty point set");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (;;) {
      bool removed = false;
      for (std::size_t i = 0; i < points.size() && points.size() > 1; ++i) {
        std::vector<RVec> others;
        for (std::size_t j = 0; j < points.size(); ++j)
          if (j != i) others.push_back(points[j]);
        if (rational_hull_contains(others, points[i])) {
          points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
          removed = true;
          break;
        }
      }
      if (!removed) break;
    }
    return from_vertices(dim, std::move(points));
  }

  int dim() const { return dim_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<RVec>& vertices() const { return verts_; }
  const std::vector<Vec>& vertices_d() const { return vertsd_; }

  // Supporting function: max_{s in S} <s, xi>.
  double support(const Vec& xi) const {
    double best = -inf;
    for (const Vec& v : vertsd_) best = std::max(best, dot(v, xi));
    return best;
  }

  Rational support(const RVec& xi) const {
    Rational best = rdot(verts_[0], xi);
    for (std::size_t i = 1; i < verts_.size(); ++i)
      best = std::max(best, rdot(verts_[i], xi));
    return best;
  }

  // Index of a vertex attaining the support value in direction xi.
  std::size_t support_argmax(const Vec& xi) const {
    std::size_t best = 0;
    double bv = dot(vertsd_[0], xi);
    for (std::size_t i = 1; i < vertsd_.size(); ++i) {
      double v = dot(vertsd_[i], xi);
      if (v > bv) {
        bv = v;
        best = i;
      }
    }
    return best;
  }

  // Supporting function composed with coordinate-wise log, extended to the
  // coordinate hyperplanes by upper limits: a vertex with s_j > 0 contributes
  // -infinity when |z_j| = 0, and s_j = 0 makes the factor log|z_j|^{s_j}
  // vanish. The max over vertices of sums of such terms realizes the lim sup.
  double log_support(const Vec& abs_z) const {
    double best = -inf;
    for (const Vec& v : vertsd_) {
      double t = 0;
      bool dead = false;
      for (int j = 0; j < dim_ && !dead; ++j) {
        if (v[j] == 0) continue;
        if (abs_z[j] <= 0) {
          dead = true;
        } else {
          t += v[j] * std::log(abs_z[j]);
        }
      }
      if (!dead) best = std::max(best, t);
    }
    return best;  // -inf only when every vertex dies, i.e. 0 is not a vertex
  }

  Polytope scaled_by(long m) const {
    if (m < 1) throw input_error("scale factor must be >= 1");
    std::vector<RVec> vs = verts_;
    for (RVec& v : vs)
      for (Rational& c : v) c *= m;
    return from_vertices(dim_, std::move(vs));
  }

  // Exact membership. In 2D this walks the edge inequalities; otherwise it
  // solves the convex-combination feasibility problem in rational arithmetic.
  bool contains(const RVec& p) const {
    if (static_cast<int>(p.size()) != dim_) throw error("point arity mismatch");
    for (const Rational& c : p)
      if (c < 0) return false;
    if (dim_ == 1) {
      Rational hi = 0;
      for (const RVec& v : verts_) hi = std::max(hi, v[0]);
      return p[0] >= 0 && p[0] <= hi;
    }
    if (dim_ == 2 && verts_.size() >= 3) {
      const auto& ring = ccw_ring();
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const RVec& a = verts_[ring[i]];
        const RVec& b = verts_[ring[(i + 1) % ring.size()]];
        Rational cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cross < 0) return false;
      }
      return true;
    }
    return rational_hull_contains(verts_, p);
  }

  bool contains(const MultiIndex& alpha) const { return contains(to_rational(alpha)); }

  // Floating membership with tolerance band: exact test on the rationalized
  // point first, then a projection distance check so points within tol of the
  // boundary count as inside.
  bool contains_approx(const Vec& p, double tol) const {
    RVec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      double c = p[i];
      if (!std::isfinite(c)) return false;
      if (c < -tol) return false;
      q[i] = Rational(std::max(c, 0.0));
    }
    if (contains(q)) return true;
    return project_to_hull(vertsd_, p).distance <= tol;
  }

  // Coordinatewise-max corner bound, exact.
  RVec box_corner() const {
    RVec c(static_cast<std::size_t>(dim_), Rational(0));
    for (const RVec& v : verts_)
      for (int j = 0; j < dim_; ++j) c[j] = std::max(c[j], v[j]);
    return c;
  }

  // S is a lower set if it contains the box [0, s] for each vertex s.
  // Checking the 2^n box corners of every vertex decides this exactly.
  bool is_lower_set() const {
    for (const RVec& v : verts_) {
      for (unsigned mask = 0; mask < (1u << dim_); ++mask) {
        RVec corner(static_cast<std::size_t>(dim_), Rational(0));
        for (int j = 0; j < dim_; ++j)
          if (mask & (1u << j)) corner[j] = v[j];
        if (!contains(corner)) return false;
      }
    }
    return true;
  }

  // Vertex indices in counterclockwise order (2D only).
  const std::vector<std::size_t>& ccw_ring() const {
    if (dim_ != 2) throw error("ccw_ring is 2D only");
    return ring_;
  }

  static bool rational_hull_contains(const std::vector<RVec>& verts, const RVec& p) {
    const std::size_t k = verts.size();
    if (k == 0) return false;
    const std::size_t n = p.size();
    // lambda in [0,1]^k, sum lambda v = p, sum lambda = 1 (equalities as
    // inequality pairs; phase 1 of the exact simplex decides feasibility).
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t d = 0; d < n; ++d) {
      std::vector<Rational> row(k), neg(k);
      for (std::size_t i = 0; i < k; ++i) {
        row[i] = verts[i][d];
        neg[i] = -verts[i][d];
      }
      A.push_back(row);
      b.push_back(p[d]);
      A.push_back(neg);
      b.push_back(-p[d]);
    }
    A.push_back(std::vector<Rational>(k, Rational(1)));
    b.push_back(Rational(1));
    A.push_back(std::vector<Rational>(k, Rational(-1)));
    b.push_back(Rational(-1));
    std::vector<Rational> lo(k, Rational(0)), hi(k, Rational(1));
    return lp_feasible(A, b, lo, hi);
  }

 private:
  Polytope() = default;

  void sort_vertices() { std::sort(verts_.begin(), verts_.end()); }

  bool in_hull_of_others(std::size_t i) const {
    std::vector<RVec> others;
    for (std::size_t j = 0; j < verts_.size(); ++j)
      if (j != i) others.push_back(verts_[j]);
    return rational_hull_contains(others, verts_[i]);
  }

  void rebuild_cache() {
    vertsd_.clear();
    for (const RVec& v : verts_) vertsd_.push_back(to_double(v));
    if (dim_ == 2) build_ring();
  }

  // Orders vertex indices counterclockwise by exact orientation tests around
  // the lexicographically smallest vertex. Works for segments too (ring of 2).
  void build_ring() {
    ring_.resize(verts_.size());
    for (std::size_t i = 0; i < ring_.size(); ++i) ring_[i] = i;
    if (verts_.size() <= 2) return;
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < verts_.size(); ++i)
      if (verts_[i] < verts_[pivot]) pivot = i;
    std::swap(ring_[0], ring_[pivot]);
    const RVec& p0 = verts_[ring_[0]];
    std::sort(ring_.begin() + 1, ring_.end(), [&](std::size_t a, std::size_t b) {
      const RVec& pa = verts_[a];
      const RVec& pb = verts_[b];
      Rational cross = (pa[0] - p0[0]) * (pb[1] - p0[1]) - (pa[1] - p0[1]) * (pb[0] - p0[0]);
      if (cross != 0) return cross > 0;
      // Collinear with the pivot: nearer first (cannot happen with extreme
      // vertices except the final edge back; ordering by distance keeps the
      // ring consistent either way).
      Rational da = (pa[0] - p0[0]) * (pa[0] - p0[0]) + (pa[1] - p0[1]) * (pa[1] - p0[1]);
      Rational db = (pb[0] - p0[0]) * (pb[0] - p0[0]) + (pb[1] - p0[1]) * (pb[1] - p0[1]);
      return da < db;
    });
  }

  int dim_ = 0;
  std::vector<RVec> verts_;
  std::vector<Vec> vertsd_;
  std::vector<std::size_t> ring_;
};

// Weight data: phi_S scaled by 2m plus the logarithmic correction strength.
struct WeightSpec {
  Polytope S;
  long m = 1;
  double gamma = 0;
  std::optional<Rational> gamma_exact;

  WeightSpec(Polytope S_, long m_, double gamma_) : S(std::move(S_)), m(m_), gamma(gamma_) {
    validate();
  }
  WeightSpec(Polytope S_, long m_, const Rational& g)
      : S(std::move(S_)), m(m_), gamma(static_cast<double>(g)), gamma_exact(g) {
    validate();
  }

  void validate() const {
    if (m < 1) throw input_error("m must be a positive integer");
    if (!(gamma >= 0) || !std::isfinite(gamma))
      throw input_error("gamma must be finite and >= 0");
  }

  // psi(z) = 2m H_S(z) + gamma log(1+|z|^2), finite away from the axes.
  double weight(const Vec& abs_z) const {
    double h = S.log_support(abs_z);
    double r2 = 0;
    for (double v : abs_z) r2 += v * v;
    double g = gamma * std::log1p(r2);
    if (h == -inf) return -inf;
    return 2.0 * static_cast<double>(m) * h + g;
  }
};

}  // namespace slelong
