#pragma once

#include <cmath>
#include <stdexcept>

#include "s2g/cochain.hpp"
#include "s2g/cover.hpp"

namespace s2g {

// Morphism of the weak 2-group: a pair of cover points over the same group
// element plus a circle value.  Target-first convention: s(m)=v1, t(m)=v0.
struct TwoMorphism {
  CoverPoint v0, v1;
  double a = 0.0;
};

inline CoverPoint source(const TwoMorphism& m) { return m.v1; }
inline CoverPoint target(const TwoMorphism& m) { return m.v0; }
inline TwoMorphism id_morphism(const CoverPoint& v) { return TwoMorphism{v, v, 0.0}; }

inline double morphism_defect(const TwoMorphism& m) { return dist(pi1(m.v0), pi1(m.v1)); }

// All operations are parameterized by an immutable cocycle handle.
struct TwoGroup {
  SMThreeCocycle lambda;

  double l21(const CoverPoint& a, const CoverPoint& b, const CoverPoint& c) const {
    return lambda.l21.eval(make_arg(a, b, c));
  }
  double l12(const CoverPoint& x, const CoverPoint& y) const {
    return lambda.l12.eval(make_arg(x, y));
  }
  double l03(const CoverPoint& v) const { return lambda.l03.eval(make_arg(v)); }

  TwoMorphism compose_vertical(const TwoMorphism& m0, const TwoMorphism& m1) const {
    if (!(m0.v1.idx == m1.v0.idx) || dist(pi1(m0.v1), pi1(m1.v0)) > 1e-9)
      throw std::invalid_argument("non-composable vertical pair");
    return TwoMorphism{m0.v0, m1.v1,
                       circle_reduce(m0.a + m1.a + l21(m0.v0, m0.v1, m1.v1))};
  }

  TwoMorphism vertical_inverse(const TwoMorphism& m) const {
    return TwoMorphism{m.v1, m.v0, circle_reduce(-m.a - l21(m.v0, m.v1, m.v0))};
  }

  TwoMorphism compose_horizontal(const TwoMorphism& m, const TwoMorphism& n) const {
    double a = circle_reduce(m.a + n.a + l12(phi2(m.v0, n.v0), phi2(m.v1, n.v1)));
    return TwoMorphism{otimes(m.v0, n.v0), otimes(m.v1, n.v1), a};
  }

  TwoMorphism unitor_left(const CoverPoint& v) const {
    return TwoMorphism{v, phi1(pi1(v)), 0.0};
  }
  TwoMorphism unitor_right(const CoverPoint& v) const {
    return TwoMorphism{v, phi1(pi1(v)), 0.0};
  }

  TwoMorphism associator(const CoverPoint& v0, const CoverPoint& v1, const CoverPoint& v2) const {
    CoverPoint lhs = otimes(otimes(v0, v1), v2);
    CoverPoint rhs = otimes(v0, otimes(v1, v2));
    return TwoMorphism{lhs, rhs, l03(phi3(v0, v1, v2))};
  }
};

struct LawReport {
  double max_residual = 0.0;
  int samples = 0;
  int mismatches = 0;  // cross-validation disagreements, where applicable
  bool pass(double tol) const { return max_residual < tol && mismatches == 0; }
};

// Pentagon residual per sample, evaluated both through the five-term circle
// identity and through the simplicial differential of l03 at the level-4
// preferred filler; the two must agree sample for sample.
inline LawReport check_pentagon(const TwoGroup& G, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  Cochain dn = delta_nerve(G.lambda.l03);
  LawReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    CoverPoint v0 = random_object(rng), v1 = random_object(rng), v2 = random_object(rng),
               v3 = random_object(rng);
    double five = G.l03(phi3(v1, v2, v3)) - G.l03(phi3(otimes(v0, v1), v2, v3)) +
                  G.l03(phi3(v0, otimes(v1, v2), v3)) - G.l03(phi3(v0, v1, otimes(v2, v3))) +
                  G.l03(phi3(v0, v1, v2));
    double r1 = circle_dist0(five);
    double r2 = circle_dist0(dn.eval(make_arg(phi4(v0, v1, v2, v3))));
    rep.max_residual = std::max(rep.max_residual, std::max(r1, r2));
    if ((r1 < tol) != (r2 < tol) || std::abs(r1 - r2) > 1e-12) rep.mismatches++;
  }
  return rep;
}

inline LawReport check_interchange(const TwoGroup& G, std::uint64_t seed, int samples) {
  Rng rng(seed);
  LawReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    auto column = [&rng, &G]() {
      SU2 g = random_su2(rng);
      Nerve n{{g}};
      CoverPoint a{n, random_member_index(n, rng)};
      CoverPoint b{n, random_member_index(n, rng)};
      CoverPoint c{n, random_member_index(n, rng)};
      TwoMorphism m0{a, b, uniform(rng, 0.0, 1.0)};
      TwoMorphism m1{b, c, uniform(rng, 0.0, 1.0)};
      return std::pair<TwoMorphism, TwoMorphism>(m0, m1);
    };
    auto [m0, m1] = column();
    auto [n0, n1] = column();
    TwoMorphism lhs = G.compose_horizontal(G.compose_vertical(m0, m1), G.compose_vertical(n0, n1));
    TwoMorphism rhs = G.compose_vertical(G.compose_horizontal(m0, n0), G.compose_horizontal(m1, n1));
    rep.max_residual = std::max(rep.max_residual, circle_dist0(lhs.a - rhs.a));
  }
  return rep;
}

// Vertical associativity, unit laws, inverse laws over random composable data.
inline LawReport check_groupoid(const TwoGroup& G, std::uint64_t seed, int samples) {
  Rng rng(seed);
  LawReport rep;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    SU2 g = random_su2(rng);
    Nerve n{{g}};
    CoverPoint a{n, random_member_index(n, rng)};
    CoverPoint b{n, random_member_index(n, rng)};
    CoverPoint c{n, random_member_index(n, rng)};
    CoverPoint d{n, random_member_index(n, rng)};
    TwoMorphism m0{a, b, uniform(rng, 0.0, 1.0)};
    TwoMorphism m1{b, c, uniform(rng, 0.0, 1.0)};
    TwoMorphism m2{c, d, uniform(rng, 0.0, 1.0)};
    // associativity: residual equals the Cech cocycle condition on l21
    TwoMorphism x = G.compose_vertical(G.compose_vertical(m0, m1), m2);
    TwoMorphism y = G.compose_vertical(m0, G.compose_vertical(m1, m2));
    rep.max_residual = std::max(rep.max_residual, circle_dist0(x.a - y.a));
    // unit laws (exact via normalization)
    TwoMorphism lu = G.compose_vertical(id_morphism(a), m0);
    TwoMorphism ru = G.compose_vertical(m0, id_morphism(b));
    rep.max_residual = std::max(rep.max_residual, circle_dist0(lu.a - m0.a));
    rep.max_residual = std::max(rep.max_residual, circle_dist0(ru.a - m0.a));
    // inverse law
    TwoMorphism iv = G.compose_vertical(m0, G.vertical_inverse(m0));
    rep.max_residual = std::max(rep.max_residual, circle_dist0(iv.a));
  }
  return rep;
}

}  // namespace s2g
