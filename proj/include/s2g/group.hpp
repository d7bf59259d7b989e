#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace s2g {

// Unit quaternion (x,y,z,w) realizing SU(2); the matrix picture is
// [[x+iy, z+iw], [-z+iw, x-iy]].
struct SU2 {
  double x = 1.0, y = 0.0, z = 0.0, w = 0.0;
};

inline constexpr double kNormEps = 1e-10;

inline SU2 su2_identity() { return SU2{1.0, 0.0, 0.0, 0.0}; }

inline double norm2(const SU2& g) {
  return g.x * g.x + g.y * g.y + g.z * g.z + g.w * g.w;
}

// Renormalize only on drift so that exact products (e.g. with the identity)
// stay bitwise stable.
inline SU2 renorm(SU2 g) {
  double n2 = norm2(g);
  if (std::abs(n2 - 1.0) > kNormEps) {
    double n = std::sqrt(n2);
    g.x /= n;
    g.y /= n;
    g.z /= n;
    g.w /= n;
  }
  return g;
}

inline SU2 mul(const SU2& a, const SU2& b) {
  SU2 r;
  r.x = a.x * b.x - a.y * b.y - a.z * b.z - a.w * b.w;
  r.y = a.x * b.y + a.y * b.x + a.z * b.w - a.w * b.z;
  r.z = a.x * b.z - a.y * b.w + a.z * b.x + a.w * b.y;
  r.w = a.x * b.w + a.y * b.z - a.z * b.y + a.w * b.x;
  return renorm(r);
}

inline SU2 inv(const SU2& g) { return SU2{g.x, -g.y, -g.z, -g.w}; }

inline double dist(const SU2& a, const SU2& b) {
  double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z, dw = a.w - b.w;
  return std::sqrt(dx * dx + dy * dy + dz * dz + dw * dw);
}

inline bool same(const SU2& a, const SU2& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z && a.w == b.w;
}

inline bool is_identity(const SU2& g) {
  return g.x == 1.0 && g.y == 0.0 && g.z == 0.0 && g.w == 0.0;
}

struct Spin4 {
  SU2 left, right;
};

inline Spin4 mul(const Spin4& a, const Spin4& b) {
  return Spin4{mul(a.left, b.left), mul(a.right, b.right)};
}

inline Spin4 inv(const Spin4& g) { return Spin4{inv(g.left), inv(g.right)}; }

inline double dist(const Spin4& a, const Spin4& b) {
  return std::max(dist(a.left, b.left), dist(a.right, b.right));
}

// Lie algebra element in the fixed basis e_i = i*sigma_i per su(2) block;
// size 3 for su(2), 6 for spin(4) = su(2) + su(2).
struct Algebra {
  std::vector<double> c;

  Algebra() = default;
  explicit Algebra(std::size_t n) : c(n, 0.0) {}
  explicit Algebra(std::vector<double> v) : c(std::move(v)) {}

  std::size_t dim() const { return c.size(); }
};

inline Algebra su2_basis(int i) {
  Algebra a(3);
  a.c[static_cast<std::size_t>(i)] = 1.0;
  return a;
}

inline Algebra add(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("algebra dim mismatch");
  Algebra r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

inline Algebra scale(double t, const Algebra& a) {
  Algebra r = a;
  for (auto& v : r.c) v *= t;
  return r;
}

// [e_i, e_j] = -2 eps_{ijk} e_k within each su(2) block.
inline Algebra bracket(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("algebra dim mismatch");
  Algebra r(a.dim());
  for (std::size_t blk = 0; blk + 2 < a.dim() + 1; blk += 3) {
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      r.c[blk + static_cast<std::size_t>(k)] +=
          -2.0 * (a.c[blk + static_cast<std::size_t>(i)] * b.c[blk + static_cast<std::size_t>(j)] -
                  a.c[blk + static_cast<std::size_t>(j)] * b.c[blk + static_cast<std::size_t>(i)]);
    }
  }
  return r;
}

// Killing pairing normalized to <a,b> = -1/2 tr(ab): the identity Gram matrix
// in the e_i basis.
inline double killing(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("algebra dim mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a.c[i] * b.c[i];
  return s;
}

inline double anorm(const Algebra& a) { return std::sqrt(killing(a, a)); }

// Algebra vector (a1,a2,a3) corresponds to the pure quaternion (0,a3,a2,a1).
inline SU2 exp_su2(const Algebra& a, double t = 1.0) {
  if (a.dim() != 3) throw std::invalid_argument("exp_su2 wants su(2)");
  double n = anorm(a);
  double th = t * n;
  SU2 g;
  g.x = std::cos(th);
  double f = (n < 1e-300) ? t : std::sin(th) / n;
  g.y = f * a.c[2];
  g.z = f * a.c[1];
  g.w = f * a.c[0];
  return renorm(g);
}

inline Spin4 exp_spin4(const Algebra& a, double t = 1.0) {
  if (a.dim() != 6) throw std::invalid_argument("exp_spin4 wants spin(4)");
  Algebra l(std::vector<double>{a.c[0], a.c[1], a.c[2]});
  Algebra r(std::vector<double>{a.c[3], a.c[4], a.c[5]});
  return Spin4{exp_su2(l, t), exp_su2(r, t)};
}

// Principal branch: requires nonnegative real part.
inline Algebra log_su2(const SU2& g) {
  if (g.x < 0.0) throw std::domain_error("log_su2 outside principal branch");
  double s = std::sqrt(g.y * g.y + g.z * g.z + g.w * g.w);
  double th = std::atan2(s, g.x);
  double f = (s < 1e-300) ? 1.0 : th / s;
  Algebra a(3);
  a.c[0] = f * g.w;
  a.c[1] = f * g.z;
  a.c[2] = f * g.y;
  return a;
}

inline Eigen::Matrix2cd to_matrix(const SU2& g) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  m(0, 0) = g.x + 1i * g.y;
  m(0, 1) = g.z + 1i * g.w;
  m(1, 0) = -g.z + 1i * g.w;
  m(1, 1) = g.x - 1i * g.y;
  return m;
}

inline Eigen::Matrix2cd su2_alg_matrix(const Algebra& a) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  m(0, 0) = 1i * a.c[2];
  m(0, 1) = a.c[1] + 1i * a.c[0];
  m(1, 0) = -a.c[1] + 1i * a.c[0];
  m(1, 1) = -1i * a.c[2];
  return m;
}

inline Eigen::Matrix4cd spin4_alg_matrix(const Algebra& a) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  Algebra l(std::vector<double>{a.c[0], a.c[1], a.c[2]});
  Algebra r(std::vector<double>{a.c[3], a.c[4], a.c[5]});
  m.block<2, 2>(0, 0) = su2_alg_matrix(l);
  m.block<2, 2>(2, 2) = su2_alg_matrix(r);
  return m;
}

}  // namespace s2g
