#pragma once

// Lattice-point enumeration around a scaled polytope and the lattice gap: the
// Euclidean distance between mS and the lattice points outside it. The search
// region is sound because any candidate farther than the current best bound in
// some coordinate is farther in distance.

#include "slelong/core.hpp"
#include "slelong/polytope.hpp"
#include "slelong/projection.hpp"

#include <vector>

namespace slelong {

struct TaggedLatticePoint {
  MultiIndex alpha;
  bool inside = false;
};

namespace detail {

inline long rational_floor(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncation; inputs here are >= 0
  if (q * den > num) --q;
  return static_cast<long>(q);
}

template <class Fn>
void for_each_box_point(const std::vector<long>& hi, Fn&& fn) {
  MultiIndex alpha(hi.size(), 0);
  for (;;) {
    fn(alpha);
    std::size_t j = hi.size();
    while (j > 0 && alpha[j - 1] == hi[j - 1]) {
      alpha[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
    ++alpha[j - 1];
  }
}

}  // namespace detail

// All alpha in N^n with alpha_j <= box_j(mS) + margin, tagged by exact
// membership in mS. Sorted lexicographically by construction.
inline std::vector<TaggedLatticePoint> lattice_points(const Polytope& S, long m,
                                                      double margin = 0,
                                                      std::size_t cap = 2000000) {
  if (margin < 0 || !std::isfinite(margin)) throw input_error("margin must be finite and >= 0");
  Polytope P = m == 1 ? S : S.scaled_by(m);
  RVec corner = P.box_corner();
  Rational rmargin(margin);
  std::vector<long> hi(corner.size());
  double count = 1;
  for (std::size_t j = 0; j < corner.size(); ++j) {
    hi[j] = detail::rational_floor(corner[j] + rmargin);
    count *= static_cast<double>(hi[j] + 1);
  }
  if (count > static_cast<double>(cap))
    throw input_error("lattice enumeration box exceeds cap (" + format_double(count) +
                      " points)");
  std::vector<TaggedLatticePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  detail::for_each_box_point(hi, [&](const MultiIndex& alpha) {
    out.push_back({alpha, P.contains(alpha)});
  });
  return out;
}

struct LatticeGapResult {
  double value = 0;
  MultiIndex witness;      // nearest lattice point outside mS
  Vec witness_projection;  // its projection onto mS
};

// d_m = d(mS, N^n \ mS). Initial upper bound from the explicit outside point
// (floor(box_1)+1, 0, ..., 0); the search box then covers every candidate that
// could do better, since alpha_j > box_j + bound forces distance > bound.
inline LatticeGapResult lattice_gap(const Polytope& S, long m) {
  Polytope P = m == 1 ? S : S.scaled_by(m);
  RVec corner = P.box_corner();
  const auto& Vd = P.vertices_d();

  MultiIndex start(corner.size(), 0);
  start[0] = detail::rational_floor(corner[0]) + 1;
  projection_result pr0 = project_to_hull(Vd, to_double(start));
  double bound = pr0.distance;

  LatticeGapResult best{bound, start, pr0.point};
  std::vector<long> hi(corner.size());
  for (std::size_t j = 0; j < corner.size(); ++j)
    hi[j] = detail::rational_floor(corner[j] + Rational(bound)) + 1;

  detail::for_each_box_point(hi, [&](const MultiIndex& alpha) {
    if (P.contains(alpha)) return;
    projection_result pr = project_to_hull(Vd, to_double(alpha));
    if (pr.distance < best.value - 1e-15) {
      best.value = pr.distance;
      best.witness = alpha;
      best.witness_projection = pr.point;
    }
  });
  return best;
}

}  // namespace slelong
