#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "s2g/linfty.hpp"

namespace s2g {

using P4 = std::array<double, 4>;

inline int n_combos(int deg) {
  static const int n[5] = {1, 4, 6, 4, 1};
  return n[deg];
}

// Lexicographically sorted index combinations per degree.
inline const std::vector<std::vector<int>>& combos(int deg) {
  static const std::vector<std::vector<std::vector<int>>> all = {
      {{}},
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
      {{0, 1, 2, 3}}};
  return all[static_cast<std::size_t>(deg)];
}

inline int combo_index(int deg, const std::vector<int>& c) {
  const auto& table = combos(deg);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == c) return static_cast<int>(i);
  throw std::invalid_argument("combo not found");
}

inline int perm_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// Differential form on R^4 with values in R^vdim; components follow combos().
struct FormField {
  int degree = 0;
  int vdim = 1;
  std::function<std::vector<std::vector<double>>(const P4&)> eval;
};

inline FormField form_zero(int degree, int vdim) {
  return FormField{degree, vdim, [degree, vdim](const P4&) {
                     return std::vector<std::vector<double>>(
                         static_cast<std::size_t>(n_combos(degree)),
                         std::vector<double>(static_cast<std::size_t>(vdim), 0.0));
                   }};
}

inline FormField form_add(const FormField& a, const FormField& b) {
  if (a.degree != b.degree || a.vdim != b.vdim) throw std::invalid_argument("form mismatch");
  auto fa = a.eval, fb = b.eval;
  return FormField{a.degree, a.vdim, [fa, fb](const P4& x) {
                     auto va = fa(x);
                     auto vb = fb(x);
                     for (std::size_t i = 0; i < va.size(); ++i)
                       for (std::size_t j = 0; j < va[i].size(); ++j) va[i][j] += vb[i][j];
                     return va;
                   }};
}

inline FormField form_scale(double s, const FormField& a) {
  auto fa = a.eval;
  return FormField{a.degree, a.vdim, [fa, s](const P4& x) {
                     auto v = fa(x);
                     for (auto& c : v)
                       for (auto& t : c) t *= s;
                     return v;
                   }};
}

// Central finite-difference exterior derivative.
inline FormField ext_d(const FormField& f, double h) {
  int deg = f.degree;
  if (deg > 3) throw std::invalid_argument("ext_d degree > 3");
  auto fe = f.eval;
  int vdim = f.vdim;
  return FormField{deg + 1, vdim, [fe, deg, vdim, h](const P4& x) {
    const auto& out_combos = combos(deg + 1);
    std::vector<std::vector<double>> r(out_combos.size(),
                                       std::vector<double>(static_cast<std::size_t>(vdim), 0.0));
    for (std::size_t oc = 0; oc < out_combos.size(); ++oc) {
      const auto& J = out_combos[oc];
      double sgn = 1.0;
      for (std::size_t j = 0; j < J.size(); ++j) {
        std::vector<int> sub;
        for (std::size_t m = 0; m < J.size(); ++m)
          if (m != j) sub.push_back(J[m]);
        int ic = combo_index(deg, sub);
        P4 xp = x, xm = x;
        xp[static_cast<std::size_t>(J[j])] += h;
        xm[static_cast<std::size_t>(J[j])] -= h;
        auto vp = fe(xp);
        auto vm = fe(xm);
        for (int t = 0; t < vdim; ++t)
          r[oc][static_cast<std::size_t>(t)] +=
              sgn * (vp[static_cast<std::size_t>(ic)][static_cast<std::size_t>(t)] -
                     vm[static_cast<std::size_t>(ic)][static_cast<std::size_t>(t)]) /
              (2.0 * h);
        sgn = -sgn;
      }
    }
    return r;
  }};
}

// Euclidean Hodge star with eps_{1234} = +1: (*w)_J = eps_{I J} w_I over the
// complementary sorted multi-index I.
inline FormField hodge(const FormField& f) {
  int deg = f.degree;
  auto fe = f.eval;
  int vdim = f.vdim;
  return FormField{4 - deg, vdim, [fe, deg, vdim](const P4& x) {
    auto v = fe(x);
    const auto& in_combos = combos(deg);
    const auto& out_combos = combos(4 - deg);
    std::vector<std::vector<double>> r(out_combos.size(),
                                       std::vector<double>(static_cast<std::size_t>(vdim), 0.0));
    for (std::size_t ic = 0; ic < in_combos.size(); ++ic) {
      const auto& I = in_combos[ic];
      std::vector<int> J;
      for (int m = 0; m < 4; ++m) {
        bool in = false;
        for (int i : I)
          if (i == m) in = true;
        if (!in) J.push_back(m);
      }
      std::vector<int> concat = I;
      concat.insert(concat.end(), J.begin(), J.end());
      double sgn = perm_sign(concat);
      std::size_t oc = static_cast<std::size_t>(combo_index(4 - deg, J));
      for (int t = 0; t < vdim; ++t)
        r[oc][static_cast<std::size_t>(t)] += sgn * v[ic][static_cast<std::size_t>(t)];
    }
    return r;
  }};
}

// mu2 on a pair of algebra-valued 1-forms: (mu2(A,A'))_{mu nu} =
// mu2(A_mu, A'_nu) - mu2(A_nu, A'_mu).
inline FormField mu2_wedge11(const FormField& a, const FormField& b, const TwoTermLInfty& L) {
  auto fa = a.eval, fb = b.eval;
  TwoTermLInfty Lc = L;
  return FormField{2, L.n0, [fa, fb, Lc](const P4& x) {
    auto va = fa(x);
    auto vb = fb(x);
    std::vector<std::vector<double>> r(6, std::vector<double>(static_cast<std::size_t>(Lc.n0), 0.0));
    const auto& cs = combos(2);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      int mu = cs[c][0], nu = cs[c][1];
      auto t1 = Lc.mu2_00(va[static_cast<std::size_t>(mu)], vb[static_cast<std::size_t>(nu)]);
      auto t2 = Lc.mu2_00(va[static_cast<std::size_t>(nu)], vb[static_cast<std::size_t>(mu)]);
      for (std::size_t t = 0; t < t1.size(); ++t) r[c][t] = t1[t] - t2[t];
    }
    return r;
  }};
}

// Fully antisymmetrized mu3 on three copies of a 1-form; returns the 3-form
// whose (a<b<c) coefficient is sum over permutations with signs (6 terms).
inline FormField mu3_wedge111(const FormField& a, const TwoTermLInfty& L) {
  auto fa = a.eval;
  TwoTermLInfty Lc = L;
  return FormField{3, L.n1, [fa, Lc](const P4& x) {
    auto v = fa(x);
    std::vector<std::vector<double>> r(4, std::vector<double>(static_cast<std::size_t>(Lc.n1), 0.0));
    const auto& cs = combos(3);
    static const int perms[6][4] = {{0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
                                    {0, 2, 1, -1}, {2, 1, 0, -1}, {1, 0, 2, -1}};
    for (std::size_t c = 0; c < cs.size(); ++c) {
      for (const auto& p : perms) {
        auto t = Lc.mu3_000(v[static_cast<std::size_t>(cs[c][static_cast<std::size_t>(p[0])])],
                            v[static_cast<std::size_t>(cs[c][static_cast<std::size_t>(p[1])])],
                            v[static_cast<std::size_t>(cs[c][static_cast<std::size_t>(p[2])])]);
        for (std::size_t m = 0; m < t.size(); ++m) r[c][m] += p[3] * t[m];
      }
    }
    return r;
  }};
}

// mu3(x, A, A) for a 0-form x and 1-form A: the (mu < nu) coefficient is
// mu3(x, A_mu, A_nu) - mu3(x, A_nu, A_mu).
inline FormField mu3_x_AA(const FormField& x0, const FormField& a, const TwoTermLInfty& L) {
  auto fx = x0.eval, fa = a.eval;
  TwoTermLInfty Lc = L;
  return FormField{2, L.n1, [fx, fa, Lc](const P4& x) {
    auto vx = fx(x)[0];
    auto va = fa(x);
    std::vector<std::vector<double>> r(6, std::vector<double>(static_cast<std::size_t>(Lc.n1), 0.0));
    const auto& cs = combos(2);
    for (std::size_t c = 0; c < cs.size(); ++c) {
      int mu = cs[c][0], nu = cs[c][1];
      auto t1 = Lc.mu3_000(vx, va[static_cast<std::size_t>(mu)], va[static_cast<std::size_t>(nu)]);
      auto t2 = Lc.mu3_000(vx, va[static_cast<std::size_t>(nu)], va[static_cast<std::size_t>(mu)]);
      for (std::size_t m = 0; m < t1.size(); ++m) r[c][m] = t1[m] - t2[m];
    }
    return r;
  }};
}

// mu2(A, x) for a 1-form A and 0-form x, per slot.
inline FormField mu2_A_x(const FormField& a, const FormField& x0, const TwoTermLInfty& L) {
  auto fa = a.eval, fx = x0.eval;
  TwoTermLInfty Lc = L;
  return FormField{1, L.n0, [fa, fx, Lc](const P4& x) {
    auto va = fa(x);
    auto vx = fx(x)[0];
    std::vector<std::vector<double>> r(4);
    for (std::size_t mu = 0; mu < 4; ++mu) r[mu] = Lc.mu2_00(va[mu], vx);
    return r;
  }};
}

// Homotopy Maurer-Cartan residuals: F = dA + 1/2 mu2(A,A),
// H = dB - (1/3!) mu3(A,A,A).
inline std::pair<FormField, FormField> mc_residuals(const FormField& A, const FormField& B,
                                                    const TwoTermLInfty& L, double h) {
  FormField F = form_add(ext_d(A, h), form_scale(0.5, mu2_wedge11(A, A, L)));
  FormField H = form_add(ext_d(B, h), form_scale(-1.0 / 6.0, mu3_wedge111(A, L)));
  return {F, H};
}

// First-order gauge update A' = A + eps (dx + mu2(A, x)),
// B' = B + eps (-dzeta + 1/2 mu3(x, A, A)).
inline std::pair<FormField, FormField> gauge_transform(const FormField& A, const FormField& B,
                                                       const FormField& x0, const FormField& zeta,
                                                       double eps, const TwoTermLInfty& L,
                                                       double h) {
  FormField dA = form_add(ext_d(x0, h), mu2_A_x(A, x0, L));
  FormField dB = form_add(form_scale(-1.0, ext_d(zeta, h)), form_scale(0.5, mu3_x_AA(x0, A, L)));
  return {form_add(A, form_scale(eps, dA)), form_add(B, form_scale(eps, dB))};
}

inline double form_max_abs(const FormField& f, const std::vector<P4>& pts) {
  double m = 0.0;
  for (const auto& x : pts) {
    auto v = f.eval(x);
    for (const auto& c : v)
      for (double t : c) m = std::max(m, std::abs(t));
  }
  return m;
}

inline double form_max_diff(const FormField& f, const FormField& g, const std::vector<P4>& pts) {
  double m = 0.0;
  for (const auto& x : pts) {
    auto vf = f.eval(x);
    auto vg = g.eval(x);
    for (std::size_t c = 0; c < vf.size(); ++c)
      for (std::size_t t = 0; t < vf[c].size(); ++t)
        m = std::max(m, std::abs(vf[c][t] - vg[c][t]));
  }
  return m;
}

}  // namespace s2g
