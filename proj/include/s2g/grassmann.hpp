#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "s2g/group.hpp"

namespace s2g {

// Element of a Grassmann algebra over generators theta_0..theta_{k-1} (k<=4)
// with matrix coefficients.  Each monomial is keyed by (subset mask, coefficient
// parity); the parity flag tracks oddness of the coefficient itself (e.g. a
// degree-1 modulus) so Koszul signs stay exact.  Total parity of a term is
// (coefficient parity + |mask|) mod 2.
class Grassmann {
 public:
  using Mat = Eigen::MatrixXcd;
  using Key = std::pair<unsigned, int>;  // (mask, parity)

  int ngen = 0;
  int dim = 0;  // coefficient matrix size
  std::map<Key, Mat> terms;

  Grassmann() = default;
  Grassmann(int ngen_, int dim_) : ngen(ngen_), dim(dim_) {}

  static Grassmann unit(int ngen_, int dim_) {
    Grassmann r(ngen_, dim_);
    r.terms[{0u, 0}] = Mat::Identity(dim_, dim_);
    return r;
  }

  static Grassmann constant(int ngen_, const Mat& m, int parity = 0) {
    Grassmann r(ngen_, static_cast<int>(m.rows()));
    r.terms[{0u, parity}] = m;
    return r;
  }

  static Grassmann monomial(int ngen_, unsigned mask, const Mat& m, int parity) {
    Grassmann r(ngen_, static_cast<int>(m.rows()));
    r.terms[{mask, parity}] = m;
    return r;
  }

  Mat coeff(unsigned mask, int parity) const {
    auto it = terms.find({mask, parity});
    if (it == terms.end()) return Mat::Zero(dim, dim);
    return it->second;
  }

  void add_term(unsigned mask, int parity, const Mat& m) {
    auto it = terms.find({mask, parity});
    if (it == terms.end())
      terms[{mask, parity}] = m;
    else
      it->second += m;
  }

  Grassmann& prune(double eps = 1e-300) {
    for (auto it = terms.begin(); it != terms.end();) {
      if (it->second.cwiseAbs().maxCoeff() <= eps)
        it = terms.erase(it);
      else
        ++it;
    }
    return *this;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [k, v] : terms) m = std::max(m, v.cwiseAbs().maxCoeff());
    return m;
  }
};

// Sign of merging the (disjoint) generator sets s1, s2 into sorted order.
inline int merge_sign(unsigned s1, unsigned s2, int ngen) {
  if (s1 & s2) return 0;
  int sign = 1;
  for (int i = 0; i < ngen; ++i) {
    if (s2 >> i & 1u) {
      unsigned higher = s1 >> (i + 1);
      int cnt = 0;
      while (higher) {
        cnt += static_cast<int>(higher & 1u);
        higher >>= 1;
      }
      if (cnt % 2) sign = -sign;
    }
  }
  return sign;
}

inline int popcount(unsigned m) {
  int c = 0;
  while (m) {
    c += static_cast<int>(m & 1u);
    m >>= 1;
  }
  return c;
}

inline Grassmann add(const Grassmann& a, const Grassmann& b) {
  Grassmann r = a;
  for (const auto& [k, v] : b.terms) r.add_term(k.first, k.second, v);
  return r.prune();
}

inline Grassmann scale(double c, const Grassmann& a) {
  Grassmann r = a;
  for (auto& [k, v] : r.terms) v *= c;
  return r;
}

inline Grassmann sub(const Grassmann& a, const Grassmann& b) { return add(a, scale(-1.0, b)); }

// Product with the merge sign and the Koszul sign (-1)^{p2 * |S1|} from
// moving the second coefficient past the first monomial's generators.
inline Grassmann mul(const Grassmann& a, const Grassmann& b) {
  if (a.ngen != b.ngen || a.dim != b.dim) throw std::invalid_argument("grassmann arity mismatch");
  Grassmann r(a.ngen, a.dim);
  for (const auto& [k1, m1] : a.terms) {
    int n1 = popcount(k1.first);
    for (const auto& [k2, m2] : b.terms) {
      int sg = merge_sign(k1.first, k2.first, a.ngen);
      if (sg == 0) continue;
      if ((k2.second * n1) % 2) sg = -sg;
      r.add_term(k1.first | k2.first, (k1.second + k2.second) % 2,
                 static_cast<double>(sg) * (m1 * m2));
    }
  }
  return r.prune();
}

// Graded commutator, with total parity (coefficient parity + generator count).
inline Grassmann graded_bracket(const Grassmann& a, const Grassmann& b) {
  Grassmann r(a.ngen, a.dim);
  for (const auto& [k1, m1] : a.terms) {
    int n1 = popcount(k1.first);
    int t1 = (k1.second + n1) % 2;
    for (const auto& [k2, m2] : b.terms) {
      int n2 = popcount(k2.first);
      int t2 = (k2.second + n2) % 2;
      unsigned s = k1.first | k2.first;
      int p = (k1.second + k2.second) % 2;
      int sg = merge_sign(k1.first, k2.first, a.ngen);
      if (sg != 0) {
        int s1 = sg * (((k2.second * n1) % 2) ? -1 : 1);
        r.add_term(s, p, static_cast<double>(s1) * (m1 * m2));
      }
      int sg2 = merge_sign(k2.first, k1.first, a.ngen);
      if (sg2 != 0) {
        int s2 = sg2 * (((k1.second * n2) % 2) ? -1 : 1);
        int koszul = (t1 && t2) ? -1 : 1;
        r.add_term(s, p, -static_cast<double>(koszul * s2) * (m2 * m1));
      }
    }
  }
  return r.prune();
}

// Simultaneous-shift derivative: d_K(c theta_S) = (-1)^p c sum_j (-1)^{j-1}
// theta_{S minus its j-th generator}.
inline Grassmann d_K(const Grassmann& a) {
  Grassmann r(a.ngen, a.dim);
  for (const auto& [k, m] : a.terms) {
    int j = 0;
    for (int i = 0; i < a.ngen; ++i) {
      if (k.first >> i & 1u) {
        ++j;
        int sg = ((j - 1) % 2) ? -1 : 1;
        if (k.second % 2) sg = -sg;
        r.add_term(k.first & ~(1u << i), k.second, static_cast<double>(sg) * m);
      }
    }
  }
  return r.prune();
}

// Left-translated logarithm: log of the body plus the truncated series in the
// nilpotent part N = body^{-1} X - 1 (exact for <= 4 generators).
inline Grassmann grassmann_log(const Grassmann& x, const Grassmann::Mat& body_log) {
  Grassmann::Mat body = x.coeff(0u, 0);
  Grassmann::Mat bi = body.inverse();
  Grassmann n(x.ngen, x.dim);
  for (const auto& [k, m] : x.terms) n.add_term(k.first, k.second, bi * m);
  n.add_term(0u, 0, -Grassmann::Mat::Identity(x.dim, x.dim));
  n.prune();
  Grassmann n2 = mul(n, n);
  Grassmann n3 = mul(n2, n);
  Grassmann n4 = mul(n3, n);
  Grassmann r = Grassmann::constant(x.ngen, body_log, 0);
  r = add(r, n);
  r = add(r, scale(-0.5, n2));
  r = add(r, scale(1.0 / 3.0, n3));
  r = add(r, scale(-0.25, n4));
  return r.prune();
}

// Pairing <x, y> = -1/2 tr(xy) applied termwise with merge and Koszul signs;
// produces a scalar-valued Grassmann number (stored as multiples of identity).
inline Grassmann killing_pair(const Grassmann& a, const Grassmann& b, double k) {
  Grassmann r(a.ngen, a.dim);
  for (const auto& [k1, m1] : a.terms) {
    int n1 = popcount(k1.first);
    for (const auto& [k2, m2] : b.terms) {
      int sg = merge_sign(k1.first, k2.first, a.ngen);
      if (sg == 0) continue;
      if ((k2.second * n1) % 2) sg = -sg;
      std::complex<double> val = -0.5 * (m1 * m2).trace();
      r.add_term(k1.first | k2.first, (k1.second + k2.second) % 2,
                 k * static_cast<double>(sg) * val *
                     Grassmann::Mat::Identity(a.dim, a.dim));
    }
  }
  return r.prune();
}

}  // namespace s2g
