#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "s2g/circle.hpp"
#include "s2g/cover.hpp"

namespace s2g {

// Argument of a bidegree-(p,q) cochain: a level-q nerve point together with
// p+1 member multi-indices (the fibered product of the cover with itself).
struct CochainArg {
  Nerve pt;
  std::vector<SIndex> patches;
};

inline CochainArg make_arg(const CoverPoint& v) { return CochainArg{v.pt, {v.idx}}; }

inline CochainArg make_arg(const CoverPoint& a, const CoverPoint& b) {
  return CochainArg{a.pt, {a.idx, b.idx}};
}

inline CochainArg make_arg(const CoverPoint& a, const CoverPoint& b, const CoverPoint& c) {
  return CochainArg{a.pt, {a.idx, b.idx, c.idx}};
}

// Circle-valued cochain; eval() applies the normalization projector: the
// value is 0 whenever two subsequent patch arguments coincide or any nerve
// slot is exactly the group identity.
struct Cochain {
  int p = 0;  // Cech degree: lives on p+1 patches
  int q = 0;  // nerve degree
  std::function<double(const CochainArg&)> raw;

  double eval(const CochainArg& arg) const {
    for (std::size_t i = 0; i + 1 < arg.patches.size(); ++i)
      if (arg.patches[i] == arg.patches[i + 1]) return 0.0;
    for (const auto& g : arg.pt.g)
      if (is_identity(g)) return 0.0;
    if (!raw) return 0.0;
    return circle_reduce(raw(arg));
  }

  // Real-valued lift without the reduction mod 1, for contexts that need to
  // differentiate the value; the normalization projector still applies.
  double eval_lift(const CochainArg& arg) const {
    for (std::size_t i = 0; i + 1 < arg.patches.size(); ++i)
      if (arg.patches[i] == arg.patches[i + 1]) return 0.0;
    for (const auto& g : arg.pt.g)
      if (is_identity(g)) return 0.0;
    if (!raw) return 0.0;
    return raw(arg);
  }
};

inline Cochain zero_cochain(int p, int q) {
  return Cochain{p, q, [](const CochainArg&) { return 0.0; }};
}

// Alternating sum over dropped patch slots; raises p by one.
inline Cochain delta_cech(const Cochain& c) {
  Cochain r;
  r.p = c.p + 1;
  r.q = c.q;
  r.raw = [c](const CochainArg& arg) {
    double s = 0.0;
    double sgn = 1.0;
    for (std::size_t i = 0; i < arg.patches.size(); ++i) {
      CochainArg sub;
      sub.pt = arg.pt;
      sub.patches.reserve(arg.patches.size() - 1);
      for (std::size_t m = 0; m < arg.patches.size(); ++m)
        if (m != i) sub.patches.push_back(arg.patches[m]);
      s += sgn * c.eval(sub);
      sgn = -sgn;
    }
    return s;
  };
  return r;
}

// Simplicial differential (delta f)(s) = sum_j (-1)^j f(f_j s), transporting
// every patch index along the face maps; raises q by one.
inline Cochain delta_nerve(const Cochain& c) {
  Cochain r;
  r.p = c.p;
  r.q = c.q + 1;
  r.raw = [c](const CochainArg& arg) {
    double s = 0.0;
    double sgn = 1.0;
    int q1 = arg.pt.level();
    for (int j = 0; j <= q1; ++j) {
      CochainArg sub;
      sub.pt = face(arg.pt, j);
      sub.patches.reserve(arg.patches.size());
      for (const auto& J : arg.patches) sub.patches.push_back(face_index(J, j));
      s += sgn * c.eval(sub);
      sgn = -sgn;
    }
    return s;
  };
  return r;
}

// Formal sum of cochains of fixed total degree, keyed by (p,q).
struct CochainSum {
  std::vector<Cochain> parts;
};

inline CochainSum delta_total(const CochainSum& in) {
  CochainSum out;
  for (const auto& c : in.parts) {
    out.parts.push_back(delta_cech(c));
    Cochain n = delta_nerve(c);
    if (c.p % 2 == 1) {
      auto base = n.raw;
      n.raw = [base](const CochainArg& a) { return -base(a); };
    }
    out.parts.push_back(n);
  }
  // merge equal bidegrees
  CochainSum merged;
  for (auto& c : out.parts) {
    bool found = false;
    for (auto& m : merged.parts) {
      if (m.p == c.p && m.q == c.q) {
        auto f1 = m.raw, f2 = c.raw;
        m.raw = [f1, f2](const CochainArg& a) { return f1(a) + f2(a); };
        found = true;
        break;
      }
    }
    if (!found) merged.parts.push_back(c);
  }
  return merged;
}

// ---------------------------------------------------------------------------
// Degree-3 cocycle data and the coboundary-based generator.
// ---------------------------------------------------------------------------
struct SMThreeCocycle {
  Cochain l21;  // (2,1)
  Cochain l12;  // (1,2)
  Cochain l03;  // (0,3)
};

// Smooth step vanishing identically in a neighborhood of the group identity:
// a function of u = |g - 1|^2 = 2(1-x), zero for u <= 0.1 (i.e. x >= 0.95).
inline double identity_vanishing_bump(const SU2& g) {
  double u = 2.0 * (1.0 - g.x);
  if (u <= 0.1) return 0.0;
  return std::exp(-0.05 / (u - 0.1));
}

struct GeneratorTables {
  std::array<std::array<double, 8>, 8> W{};
  std::array<std::array<std::array<double, 8>, 8>, 8> T{};
};

inline std::shared_ptr<GeneratorTables> make_generator_tables(std::uint64_t seed) {
  auto t = std::make_shared<GeneratorTables>();
  Rng rng(seed);
  for (auto& row : t->W)
    for (auto& v : row) v = uniform(rng, -0.45, 0.45);
  for (auto& pl : t->T)
    for (auto& row : pl)
      for (auto& v : row) v = uniform(rng, -0.45, 0.45);
  return t;
}

// Random total-degree-2 cochain mu = mu^{1,1} + mu^{0,2} built from patch
// tables weighted by identity-vanishing bumps.
inline CochainSum make_mu(std::uint64_t seed) {
  auto tab = make_generator_tables(seed);
  Cochain mu11;
  mu11.p = 1;
  mu11.q = 1;
  mu11.raw = [tab](const CochainArg& a) {
    int b0 = a.patches[0].base - 1, b1 = a.patches[1].base - 1;
    return tab->W[static_cast<std::size_t>(b0)][static_cast<std::size_t>(b1)] *
           identity_vanishing_bump(a.pt.g[0]);
  };
  Cochain mu02;
  mu02.p = 0;
  mu02.q = 2;
  mu02.raw = [tab](const CochainArg& a) {
    const SIndex& J = a.patches[0];
    int c0 = J.sub[0].base - 1, c1 = J.sub[1].base - 1, c2 = J.sub[2].base - 1;
    const SU2& g1 = a.pt.g[0];
    const SU2& g2 = a.pt.g[1];
    return tab->T[static_cast<std::size_t>(c0)][static_cast<std::size_t>(c1)]
                 [static_cast<std::size_t>(c2)] *
           identity_vanishing_bump(g1) * identity_vanishing_bump(g2) *
           identity_vanishing_bump(mul(g1, g2));
  };
  return CochainSum{{mu11, mu02}};
}

// lambda = (delta mu) arranged so that the four component conditions
//   dC l21 = 0,  dN l21 = dC l12,  dN l12 = dC l03,  dN l03 = 0
// hold exactly: l21 = dC mu11, l12 = dN mu11 + dC mu02, l03 = dN mu02.
inline SMThreeCocycle generate_coboundary_cocycle(std::uint64_t seed) {
  CochainSum mu = make_mu(seed);
  const Cochain& mu11 = mu.parts[0];
  const Cochain& mu02 = mu.parts[1];
  SMThreeCocycle l;
  l.l21 = delta_cech(mu11);
  Cochain a = delta_nerve(mu11);
  Cochain b = delta_cech(mu02);
  l.l12 = Cochain{1, 2, [a, b](const CochainArg& x) { return a.eval(x) + b.eval(x); }};
  l.l03 = delta_nerve(mu02);
  return l;
}

inline SMThreeCocycle zero_three_cocycle() {
  return SMThreeCocycle{zero_cochain(2, 1), zero_cochain(1, 2), zero_cochain(0, 3)};
}

struct CocycleReport {
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
  bool pass(double tol) const { return r1 < tol && r2 < tol && r3 < tol && r4 < tol; }
  double max() const { return std::max(std::max(r1, r2), std::max(r3, r4)); }
};

inline CochainArg random_arg(Rng& rng, int p, int q) {
  Nerve pt;
  for (int m = 0; m < q; ++m) pt.g.push_back(random_su2(rng));
  CochainArg a;
  a.pt = pt;
  for (int m = 0; m <= p; ++m) a.patches.push_back(random_member_index(pt, rng));
  return a;
}

inline CocycleReport is_sm_cocycle(const SMThreeCocycle& l, std::uint64_t seed, int samples) {
  Rng rng(seed);
  CocycleReport rep;
  Cochain c1 = delta_cech(l.l21);
  Cochain c2a = delta_nerve(l.l21);
  Cochain c2b = delta_cech(l.l12);
  Cochain c3a = delta_nerve(l.l12);
  Cochain c3b = delta_cech(l.l03);
  Cochain c4 = delta_nerve(l.l03);
  for (int s = 0; s < samples; ++s) {
    CochainArg a1 = random_arg(rng, 3, 1);
    rep.r1 = std::max(rep.r1, circle_dist0(c1.eval(a1)));
    CochainArg a2 = random_arg(rng, 2, 2);
    rep.r2 = std::max(rep.r2, circle_dist0(c2a.eval(a2) - c2b.eval(a2)));
    CochainArg a3 = random_arg(rng, 1, 3);
    rep.r3 = std::max(rep.r3, circle_dist0(c3a.eval(a3) - c3b.eval(a3)));
    CochainArg a4 = random_arg(rng, 0, 4);
    rep.r4 = std::max(rep.r4, circle_dist0(c4.eval(a4)));
  }
  return rep;
}

// Patch-independent perturbation of l03: breaks only the dN l03 = 0
// condition (its Cech differential cancels).
inline SMThreeCocycle perturb_l03(const SMThreeCocycle& l, double amp) {
  SMThreeCocycle r = l;
  auto base = l.l03.raw;
  r.l03 = Cochain{0, 3, [base, amp](const CochainArg& a) {
            double v = base ? base(a) : 0.0;
            return v + amp * identity_vanishing_bump(a.pt.g[0]) *
                           identity_vanishing_bump(a.pt.g[1]) *
                           identity_vanishing_bump(a.pt.g[2]);
          }};
  return r;
}

}  // namespace s2g
