#pragma once

#include <cstddef>
#include <vector>

#include "s2g/group.hpp"

namespace s2g {

// 2-term L-infinity algebra W1 -> W0 in structure constants:
//   mu1: W1 -> W0, mu2: W0 x W0 -> W0 and W0 x W1 -> W1, mu3: W0^3 -> W1.
struct TwoTermLInfty {
  int n0 = 0, n1 = 0;
  std::vector<double> mu1;  // [a*n1 + alpha]: coefficient of e_a in mu1(h_alpha)
  std::vector<double> f2;   // [(c*n0 + a)*n0 + b]: e_c coeff of mu2(e_a, e_b)
  std::vector<double> g2;   // [(beta*n0 + a)*n1 + alpha]: h_beta coeff of mu2(e_a, h_alpha)
  std::vector<double> f3;   // [((alpha*n0 + a)*n0 + b)*n0 + c]: h_alpha coeff of mu3(e_a,e_b,e_c)

  std::vector<double> apply_mu1(const std::vector<double>& h) const {
    std::vector<double> r(static_cast<std::size_t>(n0), 0.0);
    for (int a = 0; a < n0; ++a)
      for (int al = 0; al < n1; ++al)
        r[static_cast<std::size_t>(a)] +=
            mu1[static_cast<std::size_t>(a * n1 + al)] * h[static_cast<std::size_t>(al)];
    return r;
  }

  std::vector<double> mu2_00(const std::vector<double>& x, const std::vector<double>& y) const {
    std::vector<double> r(static_cast<std::size_t>(n0), 0.0);
    for (int c = 0; c < n0; ++c)
      for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
          r[static_cast<std::size_t>(c)] += f2[static_cast<std::size_t>((c * n0 + a) * n0 + b)] *
                                            x[static_cast<std::size_t>(a)] *
                                            y[static_cast<std::size_t>(b)];
    return r;
  }

  std::vector<double> mu2_01(const std::vector<double>& x, const std::vector<double>& h) const {
    std::vector<double> r(static_cast<std::size_t>(n1), 0.0);
    for (int be = 0; be < n1; ++be)
      for (int a = 0; a < n0; ++a)
        for (int al = 0; al < n1; ++al)
          r[static_cast<std::size_t>(be)] +=
              g2[static_cast<std::size_t>((be * n0 + a) * n1 + al)] *
              x[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(al)];
    return r;
  }

  std::vector<double> mu3_000(const std::vector<double>& x, const std::vector<double>& y,
                              const std::vector<double>& z) const {
    std::vector<double> r(static_cast<std::size_t>(n1), 0.0);
    for (int al = 0; al < n1; ++al)
      for (int a = 0; a < n0; ++a)
        for (int b = 0; b < n0; ++b)
          for (int c = 0; c < n0; ++c)
            r[static_cast<std::size_t>(al)] +=
                f3[static_cast<std::size_t>(((al * n0 + a) * n0 + b) * n0 + c)] *
                x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)] *
                z[static_cast<std::size_t>(c)];
    return r;
  }
};

inline std::vector<double> basis_vec(int n, int i) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[static_cast<std::size_t>(i)] = 1.0;
  return v;
}

// mu1 = 0, mu2 = Lie bracket (mixed part zero), mu3 = k <x1, [x2, x3]> on the
// circle line; dim = 3 for su(2), 6 for spin(4).
inline TwoTermLInfty string_lie2_products(double k, int dim) {
  TwoTermLInfty L;
  L.n0 = dim;
  L.n1 = 1;
  L.mu1.assign(static_cast<std::size_t>(dim), 0.0);
  L.f2.assign(static_cast<std::size_t>(dim * dim * dim), 0.0);
  L.g2.assign(static_cast<std::size_t>(dim), 0.0);
  L.f3.assign(static_cast<std::size_t>(dim * dim * dim), 0.0);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      Algebra ea(static_cast<std::size_t>(dim)), eb(static_cast<std::size_t>(dim));
      ea.c[static_cast<std::size_t>(a)] = 1.0;
      eb.c[static_cast<std::size_t>(b)] = 1.0;
      Algebra br = bracket(ea, eb);
      for (int c = 0; c < dim; ++c)
        L.f2[static_cast<std::size_t>((c * dim + a) * dim + b)] = br.c[static_cast<std::size_t>(c)];
      for (int c = 0; c < dim; ++c) {
        Algebra ec(static_cast<std::size_t>(dim));
        ec.c[static_cast<std::size_t>(c)] = 1.0;
        Algebra bc = bracket(eb, ec);
        L.f3[static_cast<std::size_t>((a * dim + b) * dim + c)] = k * killing(ea, bc);
      }
    }
  }
  return L;
}

struct JacobiReport {
  double r_mu1 = 0.0;   // mu1 equivariance: mu1(mu2(x,h)) = mu2(x, mu1(h))
  double r_jac = 0.0;   // Jacobiator vs mu1 . mu3
  double r_quad = 0.0;  // quadruple identity between mu3 . mu2 and mu2 . mu3
  double max() const { return std::max(r_mu1, std::max(r_jac, r_quad)); }
  bool pass(double tol) const { return max() <= tol; }
};

// All graded Jacobi identities over basis tuples, exact in structure-constant
// arithmetic.
inline JacobiReport homotopy_jacobi_check(const TwoTermLInfty& L) {
  JacobiReport rep;
  auto maxabs = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };
  auto axpy = [](std::vector<double>& r, double s, const std::vector<double>& v) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * v[i];
  };

  for (int a = 0; a < L.n0; ++a)
    for (int al = 0; al < L.n1; ++al) {
      std::vector<double> x = basis_vec(L.n0, a), h = basis_vec(L.n1, al);
      std::vector<double> lhs = L.apply_mu1(L.mu2_01(x, h));
      std::vector<double> rhs = L.mu2_00(x, L.apply_mu1(h));
      axpy(lhs, -1.0, rhs);
      rep.r_mu1 = std::max(rep.r_mu1, maxabs(lhs));
    }

  for (int a = 0; a < L.n0; ++a)
    for (int b = 0; b < L.n0; ++b)
      for (int c = 0; c < L.n0; ++c) {
        std::vector<double> x = basis_vec(L.n0, a), y = basis_vec(L.n0, b),
                            z = basis_vec(L.n0, c);
        std::vector<double> r = L.mu2_00(L.mu2_00(x, y), z);
        axpy(r, 1.0, L.mu2_00(L.mu2_00(y, z), x));
        axpy(r, 1.0, L.mu2_00(L.mu2_00(z, x), y));
        axpy(r, -1.0, L.apply_mu1(L.mu3_000(x, y, z)));
        rep.r_jac = std::max(rep.r_jac, maxabs(r));
      }

  for (int a = 0; a < L.n0; ++a)
    for (int b = 0; b < L.n0; ++b)
      for (int c = 0; c < L.n0; ++c)
        for (int d = 0; d < L.n0; ++d) {
          std::vector<double> x[4] = {basis_vec(L.n0, a), basis_vec(L.n0, b),
                                      basis_vec(L.n0, c), basis_vec(L.n0, d)};
          std::vector<double> r(static_cast<std::size_t>(L.n1), 0.0);
          // (2,2)-unshuffles with sign of the permutation
          const int pairs[6][5] = {{0, 1, 2, 3, +1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, +1},
                                   {1, 2, 0, 3, +1}, {1, 3, 0, 2, -1}, {2, 3, 0, 1, +1}};
          for (const auto& p : pairs)
            axpy(r, p[4], L.mu3_000(L.mu2_00(x[p[0]], x[p[1]]), x[p[2]], x[p[3]]));
          const int singles[4][4] = {
              {0, 1, 2, 3}, {1, 0, 2, 3}, {2, 0, 1, 3}, {3, 0, 1, 2}};
          double sgn = 1.0;
          for (const auto& s : singles) {
            axpy(r, -sgn, L.mu2_01(x[s[0]], L.mu3_000(x[s[1]], x[s[2]], x[s[3]])));
            sgn = -sgn;
          }
          rep.r_quad = std::max(rep.r_quad, maxabs(r));
        }
  return rep;
}

// Breaks the Jacobiator by bumping a single bracket structure constant.
inline TwoTermLInfty perturb_linfty(const TwoTermLInfty& L, double eps) {
  TwoTermLInfty r = L;
  r.f2[static_cast<std::size_t>((0 * L.n0 + 1) * L.n0 + 2)] += eps;
  return r;
}

}  // namespace s2g
