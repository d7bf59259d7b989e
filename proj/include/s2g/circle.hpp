#pragma once

#include <cmath>

namespace s2g {

// Additive circle R/Z with representative in [0,1).
inline double circle_reduce(double a) {
  double r = a - std::floor(a);
  if (r >= 1.0) r = 0.0;
  return r;
}

// Shortest-arc distance to 0 of a reduced value.
inline double circle_dist0(double a) {
  double r = circle_reduce(a);
  return std::min(r, 1.0 - r);
}

inline double circle_add(double a, double b) { return circle_reduce(a + b); }
inline double circle_neg(double a) { return circle_reduce(-a); }

}  // namespace s2g
