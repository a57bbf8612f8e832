// Brute force geometry oracles: componentwise dominance and planar cones.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using QV = std::vector<mpq_class>;

// Points not dominated (componentwise >=, distinct) by another point.
inline std::set<QV> undominated(const std::vector<QV>& pts) {
  std::set<QV> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (pts[j] == pts[i]) continue;
      bool ge = true;
      for (std::size_t k = 0; k < pts[i].size(); ++k) ge &= pts[i][k] >= pts[j][k];
      dominated = ge;
    }
    if (!dominated) out.insert(pts[i]);
  }
  return out;
}

inline mpq_class cross(const QV& a, const QV& b) { return a[0] * b[1] - a[1] * b[0]; }

inline QV primitive2(QV v) {
  mpz_class g = 0, l = 1;
  for (auto& x : v) l = lcm(l, x.get_den());
  for (auto& x : v) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

// Facet normals of a pointed two-dimensional cone generated by planar vectors
// spanning less than a half plane: take the two extreme generators and rotate.
inline std::set<QV> planar_facets(const std::vector<QV>& gens) {
  QV lo, hi;
  for (auto& a : gens) {
    bool all_left = true, all_right = true;
    for (auto& b : gens) {
      all_left &= cross(a, b) >= 0;
      all_right &= cross(a, b) <= 0;
    }
    if (all_left) lo = a;
    if (all_right) hi = a;
  }
  // lo is the clockwise-most generator, everything is counterclockwise from it
  QV n1{-lo[1], lo[0]};
  QV n2{hi[1], -hi[0]};
  return {primitive2(n1), primitive2(n2)};
}

}  // namespace oracle
