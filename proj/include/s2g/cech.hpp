#pragma once

#include <functional>
#include <memory>

#include "s2g/cochain.hpp"
#include "s2g/cover.hpp"
#include "s2g/manifold.hpp"
#include "s2g/twogroup.hpp"

namespace s2g {

struct ValidatorReport {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  int samples = 0;
  double max() const { return std::max(r1, std::max(r2, r3)); }
  bool pass(double tol) const { return max() < tol; }
};

// ---------------------------------------------------------------------------
// Ordinary transition functions: g_ij g_jk = g_ik.
// ---------------------------------------------------------------------------
struct OrdinaryCocycle {
  std::function<SU2(int, int, const SU2&)> g;
};

inline OrdinaryCocycle trivial_ordinary() {
  return OrdinaryCocycle{[](int, int, const SU2&) { return su2_identity(); }};
}

// g_ij = gamma_i gamma_j^{-1} from per-patch smooth group-valued functions.
inline OrdinaryCocycle generate_ordinary(std::uint64_t seed) {
  auto polys = std::make_shared<std::vector<AlgPoly>>();
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) polys->push_back(random_alg_poly(rng, 0.5));
  return OrdinaryCocycle{[polys](int i, int j, const SU2& x) {
    SU2 gi = exp_su2((*polys)[static_cast<std::size_t>(i)].eval(x));
    SU2 gj = exp_su2((*polys)[static_cast<std::size_t>(j)].eval(x));
    return mul(gi, inv(gj));
  }};
}

// Coboundary action gamma_i g_ij = g'_ij gamma_j, solved for the primed data.
inline OrdinaryCocycle transform_ordinary(const OrdinaryCocycle& c,
                                          std::function<SU2(int, const SU2&)> gamma) {
  auto g = c.g;
  return OrdinaryCocycle{[g, gamma](int i, int j, const SU2& x) {
    return mul(mul(gamma(i, x), g(i, j, x)), inv(gamma(j, x)));
  }};
}

inline OrdinaryCocycle perturb_ordinary(const OrdinaryCocycle& c, double eps) {
  auto g = c.g;
  SU2 twist = exp_su2(su2_basis(0), eps);
  return OrdinaryCocycle{[g, twist](int i, int j, const SU2& x) {
    SU2 v = g(i, j, x);
    if (i == 0 && j == 1) v = mul(v, twist);
    return v;
  }};
}

inline ValidatorReport validate_ordinary(const FiniteCover& cover, const OrdinaryCocycle& c,
                                         std::uint64_t seed, int samples) {
  Rng rng(seed);
  ValidatorReport rep;
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k) {
        auto pts = cover.sample_overlap({i, j, k}, samples, rng);
        for (const auto& x : pts) {
          rep.r1 = std::max(rep.r1, dist(mul(c.g(i, j, x), c.g(j, k, x)), c.g(i, k, x)));
          ++rep.samples;
        }
      }
  for (int i = 0; i < cover.npatch; ++i) {
    auto pts = cover.sample_overlap({i}, samples, rng);
    for (const auto& x : pts) rep.r2 = std::max(rep.r2, dist(c.g(i, i, x), su2_identity()));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Strict 2-group cocycles for the adjoint crossed module (G = H = SU(2),
// boundary = id, action = conjugation):
//   del(h_ijk) g_ij g_jk = g_ik,   h_ikl h_ijk = h_ijl (g_ij |> h_jkl).
// ---------------------------------------------------------------------------
struct StrictCocycle {
  std::function<SU2(int, int, const SU2&)> g;
  std::function<SU2(int, int, int, const SU2&)> h;
};

inline SU2 conj_act(const SU2& g, const SU2& h) { return mul(mul(g, h), inv(g)); }

inline StrictCocycle trivial_strict() {
  return StrictCocycle{[](int, int, const SU2&) { return su2_identity(); },
                       [](int, int, int, const SU2&) { return su2_identity(); }};
}

// Arbitrary smooth g on ordered pairs with g_ii = 1; h solves the first
// relation, and then the second holds identically for the adjoint module.
inline StrictCocycle generate_strict(std::uint64_t seed) {
  auto polys = std::make_shared<std::vector<AlgPoly>>();
  Rng rng(seed);
  for (int m = 0; m < 9; ++m) polys->push_back(random_alg_poly(rng, 0.4));
  auto g = [polys](int i, int j, const SU2& x) {
    if (i == j) return su2_identity();
    return exp_su2((*polys)[static_cast<std::size_t>(3 * i + j)].eval(x));
  };
  auto h = [g](int i, int j, int k, const SU2& x) {
    return mul(g(i, k, x), inv(mul(g(i, j, x), g(j, k, x))));
  };
  return StrictCocycle{g, h};
}

// gamma_i g_ij = del(chi_ij) g'_ij gamma_j and
// chi_ik h'_ijk = (gamma_i |> h_ijk) chi_ij (g'_ij |> chi_jk), solved for the
// primed data.
inline StrictCocycle transform_strict(const StrictCocycle& c,
                                      std::function<SU2(int, const SU2&)> gamma,
                                      std::function<SU2(int, int, const SU2&)> chi) {
  auto g = c.g;
  auto h = c.h;
  auto gp = [g, gamma, chi](int i, int j, const SU2& x) {
    return mul(inv(chi(i, j, x)), mul(mul(gamma(i, x), g(i, j, x)), inv(gamma(j, x))));
  };
  auto hp = [g, h, gamma, chi, gp](int i, int j, int k, const SU2& x) {
    SU2 t = conj_act(gamma(i, x), h(i, j, k, x));
    t = mul(t, chi(i, j, x));
    t = mul(t, conj_act(gp(i, j, x), chi(j, k, x)));
    return mul(inv(chi(i, k, x)), t);
  };
  return StrictCocycle{gp, hp};
}

inline StrictCocycle perturb_strict(const StrictCocycle& c, double eps) {
  auto g = c.g;
  auto h = c.h;
  SU2 twist = exp_su2(su2_basis(1), eps);
  return StrictCocycle{g, [h, twist](int i, int j, int k, const SU2& x) {
                         SU2 v = h(i, j, k, x);
                         if (i == 0 && j == 1 && k == 2) v = mul(v, twist);
                         return v;
                       }};
}

inline ValidatorReport validate_strict(const FiniteCover& cover, const StrictCocycle& c,
                                       std::uint64_t seed, int samples) {
  Rng rng(seed);
  ValidatorReport rep;
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k) {
        auto pts = cover.sample_overlap({i, j, k}, samples, rng);
        for (const auto& x : pts) {
          SU2 lhs = mul(c.h(i, j, k, x), mul(c.g(i, j, x), c.g(j, k, x)));
          rep.r1 = std::max(rep.r1, dist(lhs, c.g(i, k, x)));
          ++rep.samples;
        }
      }
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k)
        for (int l = 0; l < cover.npatch; ++l) {
          auto pts = cover.sample_overlap({i, j, k, l}, samples / 2 + 1, rng);
          for (const auto& x : pts) {
            SU2 lhs = mul(c.h(i, k, l, x), c.h(i, j, k, x));
            SU2 rhs = mul(c.h(i, j, l, x), conj_act(c.g(i, j, x), c.h(j, k, l, x)));
            rep.r2 = std::max(rep.r2, dist(lhs, rhs));
          }
        }
  return rep;
}

// ---------------------------------------------------------------------------
// Weak 2-group cocycles (v_ij, a_ijk) with values in the weak model:
//   pi(v_ik) = pi(v_ij (x) v_jk),  v_ii = 1, and the circle relation
//   a_ikl + a_ijk + l12(phi2(v_ik, v_kl), phi2(v_ij (x) v_jk, v_kl))
//     = a_ijl + a_jkl + l12(phi2(v_ij, v_jl), phi2(v_ij, v_jk (x) v_kl))
//       + l03(phi3(v_ij, v_jk, v_kl)).
// ---------------------------------------------------------------------------
struct WeakCocycle {
  std::function<CoverPoint(int, int, const SU2&)> v;
  std::function<double(int, int, int, const SU2&)> a;
};

struct WeakCoboundary {
  std::function<CoverPoint(int, const SU2&)> beta;
  std::function<double(int, int, const SU2&)> alpha;
};

inline WeakCocycle trivial_weak() {
  return WeakCocycle{[](int, int, const SU2&) { return unit_object(); },
                     [](int, int, int, const SU2&) { return 0.0; }};
}

inline WeakCoboundary generate_weak_coboundary(std::uint64_t seed) {
  auto polys = std::make_shared<std::vector<AlgPoly>>();
  auto apolys = std::make_shared<std::vector<ScalarPoly>>();
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) polys->push_back(random_alg_poly(rng, 0.5));
  for (int m = 0; m < 9; ++m) apolys->push_back(random_scalar_poly(rng, 0.3));
  return WeakCoboundary{
      [polys](int i, const SU2& x) {
        return phi1(exp_su2((*polys)[static_cast<std::size_t>(i)].eval(x)));
      },
      [apolys](int i, int j, const SU2& x) {
        return circle_reduce((*apolys)[static_cast<std::size_t>(3 * i + j)].eval(x));
      }};
}

// Applies the coboundary (beta, alpha) to the trivial cocycle, solving the
// coboundary relation for the primed data:
//   v'_ij = phi1(b_i^{-1} b_j),
//   a'_ijk = alpha_ik - alpha_ij - alpha_jk
//            - l12(phi2(beta_i, v'_ik), phi2(beta_i, v'_ij (x) v'_jk))
//            - l03(phi3(beta_i, v'_ij, v'_jk)).
inline WeakCocycle weak_from_coboundary(const TwoGroup& G, const WeakCoboundary& cb) {
  auto beta = cb.beta;
  auto alpha = cb.alpha;
  auto v = [beta](int i, int j, const SU2& x) {
    return phi1(mul(inv(pi1(beta(i, x))), pi1(beta(j, x))));
  };
  TwoGroup Gc = G;
  auto a = [Gc, beta, alpha, v](int i, int j, int k, const SU2& x) {
    CoverPoint bi = beta(i, x);
    CoverPoint vik = v(i, k, x), vij = v(i, j, x), vjk = v(j, k, x);
    double s = alpha(i, k, x) - alpha(i, j, x) - alpha(j, k, x);
    s -= Gc.l12(phi2(bi, vik), phi2(bi, otimes(vij, vjk)));
    s -= Gc.l03(phi3(bi, vij, vjk));
    return circle_reduce(s);
  };
  return WeakCocycle{v, a};
}

inline WeakCocycle perturb_weak(const WeakCocycle& c, double eps) {
  auto a = c.a;
  return WeakCocycle{c.v, [a, eps](int i, int j, int k, const SU2& x) {
                       double s = a(i, j, k, x);
                       if (i == 0 && j == 1 && k == 2) s = circle_add(s, eps);
                       return s;
                     }};
}

inline ValidatorReport validate_weak(const FiniteCover& cover, const TwoGroup& G,
                                     const WeakCocycle& c, std::uint64_t seed, int samples) {
  Rng rng(seed);
  ValidatorReport rep;
  for (int i = 0; i < cover.npatch; ++i) {
    auto pts = cover.sample_overlap({i}, samples, rng);
    for (const auto& x : pts)
      rep.r2 = std::max(rep.r2, dist(pi1(c.v(i, i, x)), su2_identity()));
  }
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k) {
        auto pts = cover.sample_overlap({i, j, k}, samples / 2 + 1, rng);
        for (const auto& x : pts)
          rep.r1 = std::max(rep.r1, dist(pi1(c.v(i, k, x)),
                                         pi1(otimes(c.v(i, j, x), c.v(j, k, x)))));
      }
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k)
        for (int l = 0; l < cover.npatch; ++l) {
          auto pts = cover.sample_overlap({i, j, k, l}, samples / 4 + 1, rng);
          for (const auto& x : pts) {
            CoverPoint vij = c.v(i, j, x), vjk = c.v(j, k, x), vkl = c.v(k, l, x);
            CoverPoint vik = c.v(i, k, x), vjl = c.v(j, l, x);
            double lhs = c.a(i, k, l, x) + c.a(i, j, k, x) +
                         G.l12(phi2(vik, vkl), phi2(otimes(vij, vjk), vkl));
            double rhs = c.a(i, j, l, x) + c.a(j, k, l, x) +
                         G.l12(phi2(vij, vjl), phi2(vij, otimes(vjk, vkl))) +
                         G.l03(phi3(vij, vjk, vkl));
            rep.r3 = std::max(rep.r3, circle_dist0(lhs - rhs));
            ++rep.samples;
          }
        }
  return rep;
}

// Direct check of the coboundary relation between (v, a) and (v', a').
inline ValidatorReport validate_weak_coboundary(const FiniteCover& cover, const TwoGroup& G,
                                                const WeakCocycle& c, const WeakCocycle& cp,
                                                const WeakCoboundary& cb, std::uint64_t seed,
                                                int samples) {
  Rng rng(seed);
  ValidatorReport rep;
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j) {
      auto pts = cover.sample_overlap({i, j}, samples, rng);
      for (const auto& x : pts) {
        SU2 lhs = mul(pi1(cb.beta(i, x)), pi1(cp.v(i, j, x)));
        SU2 rhs = mul(pi1(c.v(i, j, x)), pi1(cb.beta(j, x)));
        rep.r1 = std::max(rep.r1, dist(lhs, rhs));
        ++rep.samples;
      }
    }
  for (int i = 0; i < cover.npatch; ++i)
    for (int j = 0; j < cover.npatch; ++j)
      for (int k = 0; k < cover.npatch; ++k) {
        auto pts = cover.sample_overlap({i, j, k}, samples / 2 + 1, rng);
        for (const auto& x : pts) {
          CoverPoint vij = c.v(i, j, x), vjk = c.v(j, k, x), vik = c.v(i, k, x);
          CoverPoint wij = cp.v(i, j, x), wjk = cp.v(j, k, x), wik = cp.v(i, k, x);
          CoverPoint bi = cb.beta(i, x), bj = cb.beta(j, x), bk = cb.beta(k, x);
          double lhs = cb.alpha(i, k, x) + c.a(i, j, k, x) +
                       G.l12(phi2(vik, bk), phi2(otimes(vij, vjk), bk));
          double rhs = cb.alpha(i, j, x) + cp.a(i, j, k, x) + cb.alpha(j, k, x) +
                       G.l12(phi2(bi, wik), phi2(bi, otimes(wij, wjk))) +
                       G.l03(phi3(bi, wij, wjk)) - G.l03(phi3(vij, bj, wjk)) +
                       G.l03(phi3(vij, vjk, bk));
          rep.r2 = std::max(rep.r2, circle_dist0(lhs - rhs));
        }
      }
  return rep;
}

}  // namespace s2g
