#pragma once

#include <cstdint>
#include <random>

#include "s2g/group.hpp"

namespace s2g {

// All sampling campaigns use std::mt19937_64 with explicit seeds.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double gauss(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

inline SU2 random_su2(Rng& rng) {
  SU2 g;
  do {
    g.x = gauss(rng);
    g.y = gauss(rng);
    g.z = gauss(rng);
    g.w = gauss(rng);
  } while (norm2(g) < 1e-12);
  double n = std::sqrt(norm2(g));
  g.x /= n;
  g.y /= n;
  g.z /= n;
  g.w /= n;
  return g;
}

inline Algebra random_algebra(Rng& rng, std::size_t dim, double scale = 1.0) {
  Algebra a(dim);
  for (auto& v : a.c) v = scale * gauss(rng);
  return a;
}

}  // namespace s2g
