#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2g/cech.hpp"

using namespace s2g;

namespace {
FiniteCover cover3() { return FiniteCover{}; }
}  // namespace

TEST_CASE("overlap sampling lands in every requested patch") {
  FiniteCover c = cover3();
  Rng rng(901);
  for (int i = 0; i < c.npatch; ++i)
    for (int j = 0; j < c.npatch; ++j) {
      auto pts = c.sample_overlap({i, j}, 20, rng);
      CHECK(pts.size() == 20);
      for (const auto& x : pts) {
        CHECK(c.member(i, x));
        CHECK(c.member(j, x));
      }
    }
}

TEST_CASE("ordinary validator: trivial, generated, transformed, perturbed") {
  FiniteCover cov = cover3();
  CHECK(validate_ordinary(cov, trivial_ordinary(), 1, 30).pass(1e-12));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    OrdinaryCocycle c = generate_ordinary(seed);
    ValidatorReport r = validate_ordinary(cov, c, seed + 10, 30);
    CHECK(r.pass(1e-12));
    CHECK(r.samples >= 200);

    Rng grng(seed + 20);
    auto polys = std::make_shared<std::vector<AlgPoly>>();
    for (int i = 0; i < 3; ++i) polys->push_back(random_alg_poly(grng, 0.4));
    auto gamma = [polys](int i, const SU2& x) {
      return exp_su2((*polys)[static_cast<std::size_t>(i)].eval(x));
    };
    CHECK(validate_ordinary(cov, transform_ordinary(c, gamma), seed + 30, 30).pass(1e-12));

    ValidatorReport bad = validate_ordinary(cov, perturb_ordinary(c, 1e-2), seed + 40, 30);
    CHECK_FALSE(bad.pass(1e-6));
    CHECK(bad.r1 > 1e-4);  // the triple-product relation is the broken one
    CHECK(bad.r2 < 1e-12);
  }
}

TEST_CASE("strict validator: trivial, generated, transformed, perturbed") {
  FiniteCover cov = cover3();
  CHECK(validate_strict(cov, trivial_strict(), 1, 20).pass(1e-12));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    StrictCocycle c = generate_strict(seed);
    ValidatorReport r = validate_strict(cov, c, seed + 10, 20);
    CHECK(r.pass(1e-12));
    CHECK(r.samples >= 200);

    Rng grng(seed + 20);
    auto gp = std::make_shared<std::vector<AlgPoly>>();
    auto cp = std::make_shared<std::vector<AlgPoly>>();
    for (int i = 0; i < 3; ++i) gp->push_back(random_alg_poly(grng, 0.3));
    for (int m = 0; m < 9; ++m) cp->push_back(random_alg_poly(grng, 0.3));
    auto gamma = [gp](int i, const SU2& x) {
      return exp_su2((*gp)[static_cast<std::size_t>(i)].eval(x));
    };
    auto chi = [cp](int i, int j, const SU2& x) {
      return exp_su2((*cp)[static_cast<std::size_t>(3 * i + j)].eval(x));
    };
    CHECK(validate_strict(cov, transform_strict(c, gamma, chi), seed + 30, 20).pass(1e-12));

    ValidatorReport bad = validate_strict(cov, perturb_strict(c, 1e-2), seed + 40, 20);
    CHECK_FALSE(bad.pass(1e-6));
  }
}

TEST_CASE("weak validator: trivial, coboundary-generated, perturbed") {
  FiniteCover cov = cover3();
  TwoGroup G{generate_coboundary_cocycle(5)};
  CHECK(validate_weak(cov, G, trivial_weak(), 1, 16).pass(1e-12));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    WeakCoboundary cb = generate_weak_coboundary(seed);
    WeakCocycle c = weak_from_coboundary(G, cb);
    ValidatorReport r = validate_weak(cov, G, c, seed + 10, 16);
    CHECK(r.pass(1e-9));
    CHECK(r.samples >= 200);

    ValidatorReport bad = validate_weak(cov, G, perturb_weak(c, 1e-2), seed + 20, 16);
    CHECK_FALSE(bad.pass(1e-6));
    CHECK(bad.r1 < 1e-12);  // the group layer is untouched
    CHECK(bad.r3 > 1e-4);
  }
}

TEST_CASE("weak coboundary relation holds between the paired cocycles") {
  FiniteCover cov = cover3();
  TwoGroup G{generate_coboundary_cocycle(5)};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    WeakCoboundary cb = generate_weak_coboundary(seed);
    WeakCocycle cp = weak_from_coboundary(G, cb);
    ValidatorReport r = validate_weak_coboundary(cov, G, trivial_weak(), cp, cb, seed + 30, 16);
    CHECK(r.pass(1e-9));
  }
}

TEST_CASE("generated data is not identically trivial") {
  FiniteCover cov = cover3();
  Rng rng(902);
  OrdinaryCocycle c = generate_ordinary(9);
  double m = 0.0;
  for (const auto& x : cov.sample_overlap({0, 1}, 50, rng))
    m = std::max(m, dist(c.g(0, 1, x), su2_identity()));
  CHECK(m > 1e-2);
}
