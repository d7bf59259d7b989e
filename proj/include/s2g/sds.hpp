#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "s2g/cover.hpp"
#include "s2g/forms.hpp"
#include "s2g/rng.hpp"

namespace s2g {

// Higgs profile 1/r^2 on R^4 minus the origin; its differential is exact.
inline double phi_profile(const P4& x) {
  double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  return 1.0 / r2;
}

inline FormField phi_field() {
  return FormField{0, 1, [](const P4& x) {
                     return std::vector<std::vector<double>>{{phi_profile(x)}};
                   }};
}

inline FormField dphi_analytic() {
  return FormField{1, 1, [](const P4& x) {
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    double f = -2.0 / (r2 * r2);
    return std::vector<std::vector<double>>{{f * x[0]}, {f * x[1]}, {f * x[2]}, {f * x[3]}};
  }};
}

inline double eps4(int a, int b, int c, int d) {
  std::vector<int> p = {a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) return 0.0;
  return perm_sign(p);
}

// B-field of the abelian solution.  The (mu < nu) coefficient is
//   fac * sum_{k,l} eps_{mu nu k l} x^k g_l,
//   g_l = (R^2 arctan(r^l / x^l) - r^l x^l) / (R^2 (r^l)^3),  r^l = sqrt(R^2 - (x^l)^2).
// fac = 1/4 is the reading validated by the H = *dPhi test; fac = 3/4 is the
// face-value reading (summed over all mu,nu with prefactor 3/8) kept for the
// comparison report.
inline FormField sds_solution_B(double fac) {
  return FormField{2, 1, [fac](const P4& x) {
    double R2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    std::array<double, 4> g{};
    for (int l = 0; l < 4; ++l) {
      double rl = std::sqrt(std::max(R2 - x[static_cast<std::size_t>(l)] * x[static_cast<std::size_t>(l)], 0.0));
      g[static_cast<std::size_t>(l)] =
          (R2 * std::atan(rl / x[static_cast<std::size_t>(l)]) - rl * x[static_cast<std::size_t>(l)]) /
          (R2 * rl * rl * rl);
    }
    std::vector<std::vector<double>> r(6, std::vector<double>(1, 0.0));
    const auto& cs = combos(2);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
          s += eps4(cs[c][0], cs[c][1], k, l) * x[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(l)];
      r[c][0] = fac * s;
    }
    return r;
  }};
}

inline SU2 radial_quaternion(const P4& x) {
  double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  return SU2{x[0] / r, x[1] / r, x[2] / r, x[3] / r};
}

inline CoverPoint sds_solution_v(const P4& x) { return phi1(radial_quaternion(x)); }

// Pure-gauge connection q^{-1} dq computed by central differences on the
// radial quaternion map; values in su(2) coordinates.
inline FormField sds_solution_A(double h) {
  return FormField{1, 3, [h](const P4& x) {
    SU2 q = radial_quaternion(x);
    SU2 qi = inv(q);
    std::vector<std::vector<double>> r(4, std::vector<double>(3, 0.0));
    for (std::size_t mu = 0; mu < 4; ++mu) {
      P4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      SU2 qp = radial_quaternion(xp), qm = radial_quaternion(xm);
      // dq is not unit; multiply componentwise without renormalization
      double dx_ = (qp.x - qm.x) / (2.0 * h), dy = (qp.y - qm.y) / (2.0 * h),
             dz = (qp.z - qm.z) / (2.0 * h), dw = (qp.w - qm.w) / (2.0 * h);
      // quaternion product qi * dq, pure part -> algebra (a1,a2,a3)=(w,z,y)
      double py = qi.x * dy + qi.y * dx_ + qi.z * dw - qi.w * dz;
      double pz = qi.x * dz - qi.y * dw + qi.z * dx_ + qi.w * dy;
      double pw = qi.x * dw + qi.y * dz - qi.z * dy + qi.w * dx_;
      r[mu][0] = pw;
      r[mu][1] = pz;
      r[mu][2] = py;
    }
    return r;
  }};
}

struct SdsConfig {
  int solution = 1;
  double h = 1e-3;
  int samples = 512;
  std::uint64_t seed = 1;
  double k = 1.0;
  bool literal_reading = false;  // solution 1 only
};

struct SdsReport {
  double residual_max = 0.0;
  double residual_mean = 0.0;
  double flatness = 0.0;
  double laplacian = 0.0;
  double order = 0.0;  // Richardson estimate from h, 2h, 4h
  int excluded = 0;
  int samples = 0;
  std::string reading;  // "quarter" or "literal"
  bool pass = false;
};

// Seeded sample points with radius in [0.5, 2], jittered off the coordinate
// hyperplanes (min |x^l|/r > 0.1) where the arctan summand flips branch.
inline std::vector<P4> sds_sample_points(std::uint64_t seed, int n, int* excluded) {
  Rng rng(seed);
  std::vector<P4> pts;
  int skipped = 0;
  while (static_cast<int>(pts.size()) < n) {
    SU2 u = random_su2(rng);
    double minc = std::min(std::min(std::abs(u.x), std::abs(u.y)),
                           std::min(std::abs(u.z), std::abs(u.w)));
    if (minc <= 0.1) {
      ++skipped;
      continue;
    }
    double r = uniform(rng, 0.5, 2.0);
    pts.push_back(P4{r * u.x, r * u.y, r * u.z, r * u.w});
  }
  if (excluded) *excluded = skipped;
  return pts;
}

inline double laplacian_residual(const std::vector<P4>& pts, double h) {
  double m = 0.0;
  for (const auto& x : pts) {
    double s = -8.0 * phi_profile(x);
    for (std::size_t mu = 0; mu < 4; ++mu) {
      P4 xp = x, xm = x;
      xp[mu] += h;
      xm[mu] -= h;
      s += phi_profile(xp) + phi_profile(xm);
    }
    m = std::max(m, std::abs(s / (h * h)));
  }
  return m;
}

inline double sds_residual_at(const SdsConfig& cfg, const std::vector<P4>& pts, double h,
                              double* mean = nullptr) {
  TwoTermLInfty L = string_lie2_products(cfg.k, 3);
  FormField target = hodge(dphi_analytic());
  FormField H;
  if (cfg.solution == 1) {
    double fac = cfg.literal_reading ? 0.75 : 0.25;
    H = ext_d(sds_solution_B(fac), h);
  } else {
    H = form_scale(-1.0 / 6.0, mu3_wedge111(sds_solution_A(h), L));
  }
  double mx = 0.0, sum = 0.0;
  int cnt = 0;
  for (const auto& x : pts) {
    auto vh = H.eval(x);
    auto vt = target.eval(x);
    for (std::size_t c = 0; c < vh.size(); ++c) {
      double d = std::abs(vh[c][0] - vt[c][0]);
      mx = std::max(mx, d);
      sum += d;
      ++cnt;
    }
  }
  if (mean) *mean = sum / std::max(cnt, 1);
  return mx;
}

inline SdsReport sds_verify(const SdsConfig& cfg) {
  SdsReport rep;
  rep.samples = cfg.samples;
  rep.reading = (cfg.solution == 1 && cfg.literal_reading) ? "literal" : "quarter";
  std::vector<P4> pts = sds_sample_points(cfg.seed, cfg.samples, &rep.excluded);

  rep.residual_max = sds_residual_at(cfg, pts, cfg.h, &rep.residual_mean);
  double r2 = sds_residual_at(cfg, pts, 2.0 * cfg.h);
  double r4 = sds_residual_at(cfg, pts, 4.0 * cfg.h);
  double o1 = std::log2(r4 / r2), o2 = std::log2(r2 / rep.residual_max);
  rep.order = std::min(o1, o2);

  TwoTermLInfty L = string_lie2_products(cfg.k, 3);
  if (cfg.solution == 1) {
    rep.flatness = 0.0;  // A = 0 identically
  } else {
    FormField A = sds_solution_A(cfg.h);
    FormField F = form_add(ext_d(A, cfg.h), form_scale(0.5, mu2_wedge11(A, A, L)));
    rep.flatness = form_max_abs(F, pts);
  }
  rep.laplacian = laplacian_residual(pts, cfg.h);

  double C = 1000.0;  // residual budget per h^2 (the profile's fourth
                      // derivative reaches ~120/r^6 ~ 7.7e3 at r = 0.5)
  double h2 = cfg.h * cfg.h;
  rep.pass = rep.residual_max < C * h2 && rep.order >= 1.9 && rep.flatness < C * h2 &&
             rep.laplacian < C * h2;
  return rep;
}

// First-order gauge-consistency probe: start from the exact Maurer-Cartan
// solution (A = 0, constant B), transform by a quadratic 0-form x with
// noncommuting gradients and a quadratic 1-form zeta, and measure how the MC
// residual grows in the transform scale eps.
struct GaugeSlopeReport {
  std::vector<double> eps;
  std::vector<double> residual;
  double slope = 0.0;
  bool pass = false;
};

inline GaugeSlopeReport gauge_slope_check(std::uint64_t seed, double h) {
  Rng rng(seed);
  TwoTermLInfty L = string_lie2_products(1.0, 3);
  std::array<std::array<double, 4>, 3> c1{}, c2{};
  for (auto& row : c1)
    for (auto& v : row) v = uniform(rng, -1.0, 1.0);
  for (auto& row : c2)
    for (auto& v : row) v = uniform(rng, -1.0, 1.0);
  // x: su(2)-valued quadratic 0-form with noncommuting gradients
  FormField x0{0, 3, [c1, c2](const P4& x) {
    std::vector<std::vector<double>> r(1, std::vector<double>(3, 0.0));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t mu = 0; mu < 4; ++mu)
        r[0][a] += c1[a][mu] * x[mu] + 0.5 * c2[a][mu] * x[mu] * x[mu];
    return r;
  }};
  // zeta: circle-valued quadratic 1-form
  std::array<std::array<double, 4>, 4> z1{};
  for (auto& row : z1)
    for (auto& v : row) v = uniform(rng, -1.0, 1.0);
  FormField zeta{1, 1, [z1](const P4& x) {
    std::vector<std::vector<double>> r(4, std::vector<double>(1, 0.0));
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu) r[mu][0] += z1[mu][nu] * x[nu] * x[nu];
    return r;
  }};
  FormField A = form_zero(1, 3);
  FormField B{2, 1, [](const P4&) {
    return std::vector<std::vector<double>>(6, std::vector<double>(1, 0.3));
  }};

  std::vector<P4> pts;
  for (int i = 0; i < 32; ++i) {
    SU2 u = random_su2(rng);
    double r = uniform(rng, 0.8, 1.2);
    pts.push_back(P4{r * u.x, r * u.y, r * u.z, r * u.w});
  }

  GaugeSlopeReport rep;
  rep.eps = {1e-2, 1e-3, 1e-4};
  for (double e : rep.eps) {
    auto [Ap, Bp] = gauge_transform(A, B, x0, zeta, e, L, h);
    auto [F, H] = mc_residuals(Ap, Bp, L, h);
    rep.residual.push_back(std::max(form_max_abs(F, pts), form_max_abs(H, pts)));
  }
  // least-squares slope of log residual vs log eps
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = static_cast<int>(rep.eps.size());
  for (int i = 0; i < n; ++i) {
    double lx = std::log(rep.eps[static_cast<std::size_t>(i)]);
    double ly = std::log(rep.residual[static_cast<std::size_t>(i)]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  rep.pass = rep.slope >= 1.9;
  return rep;
}

}  // namespace s2g
