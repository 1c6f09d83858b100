#pragma once

#include <cmath>
#include <span>

#include "lorenz/curve.hpp"

namespace lorenz::detail {

inline double interpolate(const Knot& lo, const Knot& hi, double t) {
  return lo.y + (hi.y - lo.y) * ((t - lo.t) / (hi.t - lo.t));
}

// Walks the merged knot grid of two curves. For each elementary interval
// [t0, t1] the callback receives both curves' values at t0 (a1, a2) and at t1
// (b1, b2); at t1 = 1 these are the left limits. Both knot lists must end at
// t = 1 exactly.
template <class Segment>
void sweep(std::span<const Knot> k1, std::span<const Knot> k2, Segment&& segment) {
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 0.0;
  double a1 = k1[0].y;
  double a2 = k2[0].y;
  while (t < 1.0) {
    const double n1 = k1[i + 1].t;
    const double n2 = k2[j + 1].t;
    const double next = n1 < n2 ? n1 : n2;
    const double b1 = n1 == next ? k1[i + 1].y : interpolate(k1[i], k1[i + 1], next);
    const double b2 = n2 == next ? k2[j + 1].y : interpolate(k2[j], k2[j + 1], next);
    segment(t, next, a1, a2, b1, b2);
    if (n1 == next) ++i;
    if (n2 == next) ++j;
    t = next;
    a1 = b1;
    a2 = b2;
  }
}

// Integral of |d(x)| over an interval of width h on which d is linear with end
// values d0 and d1. A sign change splits the interval into two triangles.
inline double abs_linear_integral(double h, double d0, double d1) {
  const double m0 = std::abs(d0);
  const double m1 = std::abs(d1);
  if ((d0 >= 0.0 && d1 >= 0.0) || (d0 <= 0.0 && d1 <= 0.0)) return 0.5 * h * (m0 + m1);
  return 0.5 * h * (d0 * d0 + d1 * d1) / (m0 + m1);
}

}  // namespace lorenz::detail
