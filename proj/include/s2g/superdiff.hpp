#pragma once

#include <unsupported/Eigen/MatrixFunctions>

#include "s2g/grassmann.hpp"
#include "s2g/group.hpp"
#include "s2g/rng.hpp"

namespace s2g {

inline Eigen::MatrixXcd alg_matrix(const Algebra& a) {
  if (a.dim() == 3) return su2_alg_matrix(a);
  if (a.dim() == 6) return spin4_alg_matrix(a);
  throw std::invalid_argument("alg_matrix wants su(2) or spin(4)");
}

inline Algebra matrix_to_alg(const Eigen::MatrixXcd& m) {
  auto block = [](const Eigen::MatrixXcd& b, std::size_t off, Algebra& a) {
    a.c[off + 0] = b(0, 1).imag();
    a.c[off + 1] = b(0, 1).real();
    a.c[off + 2] = b(0, 0).imag();
  };
  if (m.rows() == 2) {
    Algebra a(3);
    block(m, 0, a);
    return a;
  }
  if (m.rows() == 4) {
    Algebra a(6);
    block(m.block<2, 2>(0, 0), 0, a);
    block(m.block<2, 2>(2, 2), 3, a);
    return a;
  }
  throw std::invalid_argument("matrix_to_alg wants 2x2 or 4x4");
}

// Degree-1 modulus omega and degree-2 circle modulus psi.
struct ModuliPoint {
  Algebra omega;
  double psi = 0.0;
};

// Equivalence moduli: group part b (as an algebra logarithm, so the body is
// exp(b)), its odd companion delta, circle part zeta with odd companion dzeta.
struct CoboundaryModuli {
  Algebra b;
  Algebra delta;
  double zeta = 0.0;
  double dzeta = 0.0;
};

// v(theta_i, theta_j) = (1 + omega theta_i)(1 - omega theta_j); the product
// form makes the cocycle identity v_{01} v_{12} = v_{02} hold exactly.
inline Grassmann descent_v(const Eigen::MatrixXcd& omega, int i, int j, int ngen) {
  int d = static_cast<int>(omega.rows());
  Grassmann l = Grassmann::unit(ngen, d);
  l.add_term(1u << i, 1, omega);
  Grassmann r = Grassmann::unit(ngen, d);
  r.add_term(1u << j, 1, -omega);
  return mul(l, r);
}

// Trilinear circle cochain linearization k <x1, [x2, x3]> shared with the
// connection-form layer; here on a single algebra element of odd degree.
inline double lambda3_scalar(const Eigen::MatrixXcd& omega, double k) {
  // graded [omega, omega] for odd omega is the anticommutator 2 omega^2
  Eigen::MatrixXcd br = 2.0 * omega * omega;
  return k * std::real(-0.5 * (omega * br).trace());
}

// a(theta0,theta1,theta2) = psi (t0 t1 + t1 t2 - t0 t2) + lam3 t0 t1 t2,
// with psi even and the trilinear coefficient odd.
inline Grassmann descent_a(double psi, double lam3, int dim, int ngen) {
  Grassmann a(ngen, dim);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  a.add_term(0b011u, 0, psi * id);
  a.add_term(0b110u, 0, psi * id);
  a.add_term(0b101u, 0, -psi * id);
  a.add_term(0b111u, 1, lam3 * id);
  return a.prune();
}

struct DescentData {
  Grassmann v01, v12, v02, a;
  double lam3 = 0.0;
};

inline DescentData build_descent_cocycle(const Algebra& omega, double psi, double k,
                                         int ngen = 3) {
  Eigen::MatrixXcd m = alg_matrix(omega);
  DescentData d;
  d.v01 = descent_v(m, 0, 1, ngen);
  d.v12 = descent_v(m, 1, 2, ngen);
  d.v02 = descent_v(m, 0, 2, ngen);
  d.lam3 = lambda3_scalar(m, k);
  d.a = descent_a(psi, d.lam3, static_cast<int>(m.rows()), ngen);
  return d;
}

// Trilinear evaluation on group-valued Grassmann elements via their
// left logarithms: k <log X, [log Y, log Z]>.
inline Grassmann trilinear_E(const Grassmann& x, const Grassmann& y, const Grassmann& z,
                             double k, const Eigen::MatrixXcd& lx,
                             const Eigen::MatrixXcd& ly, const Eigen::MatrixXcd& lz) {
  Grassmann a = grassmann_log(x, lx);
  Grassmann b = grassmann_log(y, ly);
  Grassmann c = grassmann_log(z, lz);
  return killing_pair(a, graded_bracket(b, c), k);
}

struct DiffReport {
  double r_omega = 0.0;     // closed formula vs expansion for d_K omega
  double r_psi = 0.0;       // closed formula vs expansion for d_K psi
  double r_vcocycle = 0.0;  // v01 v12 - v02, must be exactly 0
};

// Dual-route differentiation: (a) closed formulas d_K omega = -1/2 [omega,
// omega] (graded, = -omega^2 in the representation) and d_K psi =
// -k <omega, [omega, omega]>; (b) coefficient extraction from d_K applied to
// the built descent data.
inline DiffReport differentiate(const Algebra& omega, double psi, double k) {
  Eigen::MatrixXcd m = alg_matrix(omega);
  DescentData d = build_descent_cocycle(omega, psi, k);
  DiffReport rep;

  Grassmann dv = d_K(d.v01);
  Eigen::MatrixXcd route_b_omega = dv.coeff(0b001u, 0);
  Eigen::MatrixXcd closed_omega = -m * m;  // -1/2 (m m + m m)
  rep.r_omega = (route_b_omega - closed_omega).cwiseAbs().maxCoeff();

  Grassmann da = d_K(d.a);
  double route_b_psi = std::real(da.coeff(0b011u, 1)(0, 0));
  double closed_psi = -lambda3_scalar(m, k);
  rep.r_psi = std::abs(route_b_psi - closed_psi);

  rep.r_vcocycle = sub(mul(d.v01, d.v12), d.v02).max_abs();
  return rep;
}

// alpha(theta_i, theta_j) = zeta (theta_j - theta_i) + dzeta theta_i theta_j,
// zeta odd, dzeta even; scalar coefficients stored as multiples of identity.
inline Grassmann alpha_term(double zeta, double dzeta, int i, int j, int dim, int ngen) {
  Grassmann a(ngen, dim);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  a.add_term(1u << j, 1, zeta * id);
  a.add_term(1u << i, 1, -zeta * id);
  a.add_term((1u << i) | (1u << j), 0, dzeta * id);
  return a.prune();
}

// beta(theta_i) = B (1 - delta theta_i) with B = exp(b).
inline Grassmann beta_term(const Eigen::MatrixXcd& bmat, const Eigen::MatrixXcd& dmat,
                           int i, int ngen) {
  int d = static_cast<int>(bmat.rows());
  Grassmann tail = Grassmann::unit(ngen, d);
  tail.add_term(1u << i, 1, -dmat);
  return mul(Grassmann::constant(ngen, bmat.exp()), tail);
}

struct EquivalenceReport {
  ModuliPoint out;
  double r_group = 0.0;   // beta(t0) v'(t0,t1) - v(t0,t1) beta(t1)
  double r_circle = 0.0;  // full second descent relation, automatic
};

// Transforms (omega, psi) by the coboundary moduli: omega' = Ad_{B^{-1}} omega
// + delta, and psi' chosen so the circle relation
//   a' = a - [alpha(t1,t2) - alpha(t0,t2) + alpha(t0,t1)]
//        - E(beta(t0), v'(t0,t1), v'(t1,t2)) + E(v(t0,t1), beta(t1), v'(t1,t2))
//        - E(v(t0,t1), v(t1,t2), beta(t2))
// holds identically; the report carries the residuals of both relations.
inline EquivalenceReport equivalence_transform(const ModuliPoint& p, const CoboundaryModuli& c,
                                               double k) {
  Eigen::MatrixXcd m = alg_matrix(p.omega);
  Eigen::MatrixXcd bm = alg_matrix(c.b);
  Eigen::MatrixXcd dm = alg_matrix(c.delta);
  Eigen::MatrixXcd B = bm.exp();
  int dim = static_cast<int>(m.rows());
  int ngen = 3;

  Eigen::MatrixXcd mp = B.inverse() * m * B + dm;

  Grassmann v01 = descent_v(m, 0, 1, ngen), v12 = descent_v(m, 1, 2, ngen);
  Grassmann vp01 = descent_v(mp, 0, 1, ngen), vp12 = descent_v(mp, 1, 2, ngen);
  Grassmann b0 = beta_term(bm, dm, 0, ngen);
  Grassmann b1 = beta_term(bm, dm, 1, ngen);
  Grassmann b2 = beta_term(bm, dm, 2, ngen);

  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(dim, dim);
  Grassmann t1 = trilinear_E(b0, vp01, vp12, k, bm, zero, zero);
  Grassmann t2 = trilinear_E(v01, b1, vp12, k, zero, bm, zero);
  Grassmann t3 = trilinear_E(v01, v12, b2, k, zero, zero, bm);

  double c1 = std::real(t1.coeff(0b011u, 0)(0, 0));
  double c2 = std::real(t2.coeff(0b011u, 0)(0, 0));
  double c3 = std::real(t3.coeff(0b011u, 0)(0, 0));

  EquivalenceReport rep;
  rep.out.omega = matrix_to_alg(mp);
  rep.out.psi = p.psi - c.dzeta - c1 + c2 - c3;

  // group-part relation, exact by construction of omega'
  rep.r_group = sub(mul(b0, vp01), mul(v01, b1)).max_abs();

  // circle-part relation, automatic given psi'
  Grassmann a = descent_a(p.psi, lambda3_scalar(m, k), dim, ngen);
  Grassmann ap = descent_a(rep.out.psi, lambda3_scalar(mp, k), dim, ngen);
  Grassmann dalpha = add(sub(alpha_term(c.zeta, c.dzeta, 1, 2, dim, ngen),
                             alpha_term(c.zeta, c.dzeta, 0, 2, dim, ngen)),
                         alpha_term(c.zeta, c.dzeta, 0, 1, dim, ngen));
  Grassmann rhs = sub(sub(add(sub(a, dalpha), t2), t1), t3);
  rep.r_circle = sub(ap, rhs).max_abs();
  return rep;
}

inline ModuliPoint random_moduli(Rng& rng, std::size_t dim, double scale = 1.0) {
  ModuliPoint p;
  p.omega = random_algebra(rng, dim, scale);
  p.psi = uniform(rng, -1.0, 1.0);
  return p;
}

inline CoboundaryModuli random_coboundary_moduli(Rng& rng, std::size_t dim) {
  CoboundaryModuli c;
  c.b = random_algebra(rng, dim, 0.4);
  c.delta = random_algebra(rng, dim, 1.0);
  c.zeta = uniform(rng, -1.0, 1.0);
  c.dzeta = uniform(rng, -1.0, 1.0);
  return c;
}

}  // namespace s2g
