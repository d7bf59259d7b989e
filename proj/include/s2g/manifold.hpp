#pragma once

#include <stdexcept>
#include <vector>

#include "s2g/forms.hpp"
#include "s2g/group.hpp"
#include "s2g/rng.hpp"

namespace s2g {

// Three-patch open cover of the unit 3-sphere (as unit quaternions), cut by
// the first coordinate: two large caps plus an equatorial band.  Every
// double and triple intersection is nonempty.
struct FiniteCover {
  int npatch = 3;

  bool member(int i, const SU2& q) const {
    switch (i) {
      case 0: return q.x > -0.5;
      case 1: return q.x < 0.5;
      case 2: return std::abs(q.x) < 0.8;
      default: throw std::out_of_range("patch index");
    }
  }

  bool member_all(const std::vector<int>& idx, const SU2& q) const {
    for (int i : idx)
      if (!member(i, q)) return false;
    return true;
  }

  // Rejection sampling on the overlap of the given patches.
  std::vector<SU2> sample_overlap(const std::vector<int>& idx, int n, Rng& rng) const {
    std::vector<SU2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    int guard = 0;
    while (static_cast<int>(pts.size()) < n) {
      if (++guard > 1000 * n) throw std::runtime_error("overlap sampling stalled");
      SU2 q = random_su2(rng);
      if (member_all(idx, q)) pts.push_back(q);
    }
    return pts;
  }
};

inline P4 to_p4(const SU2& q) { return P4{q.x, q.y, q.z, q.w}; }

inline SU2 from_p4(const P4& x) {
  double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return SU2{x[0] / n, x[1] / n, x[2] / n, x[3] / n};
}

// Smooth su(2)-valued polynomial in the ambient coordinates, used to build
// scale-invariant (conical) data on the sphere via x -> x/|x|.
struct AlgPoly {
  // coefficients per algebra direction: constant, linear (4), quadratic (4, diagonal)
  std::array<double, 3> c0{};
  std::array<std::array<double, 4>, 3> c1{};
  std::array<std::array<double, 4>, 3> c2{};

  Algebra eval(const SU2& q) const {
    P4 x = to_p4(q);
    Algebra a(3);
    for (std::size_t d = 0; d < 3; ++d) {
      double v = c0[d];
      for (std::size_t mu = 0; mu < 4; ++mu)
        v += c1[d][mu] * x[mu] + c2[d][mu] * x[mu] * x[mu];
      a.c[d] = v;
    }
    return a;
  }
};

inline AlgPoly random_alg_poly(Rng& rng, double scale) {
  AlgPoly p;
  for (auto& v : p.c0) v = scale * uniform(rng, -1.0, 1.0);
  for (auto& row : p.c1)
    for (auto& v : row) v = scale * uniform(rng, -1.0, 1.0);
  for (auto& row : p.c2)
    for (auto& v : row) v = scale * uniform(rng, -1.0, 1.0);
  return p;
}

// Scalar polynomial of the same shape for circle-valued data.
struct ScalarPoly {
  double c0 = 0.0;
  std::array<double, 4> c1{};
  std::array<double, 4> c2{};

  double eval(const SU2& q) const {
    P4 x = to_p4(q);
    double v = c0;
    for (std::size_t mu = 0; mu < 4; ++mu) v += c1[mu] * x[mu] + c2[mu] * x[mu] * x[mu];
    return v;
  }
};

inline ScalarPoly random_scalar_poly(Rng& rng, double scale) {
  ScalarPoly p;
  p.c0 = scale * uniform(rng, -1.0, 1.0);
  for (auto& v : p.c1) v = scale * uniform(rng, -1.0, 1.0);
  for (auto& v : p.c2) v = scale * uniform(rng, -1.0, 1.0);
  return p;
}

}  // namespace s2g
