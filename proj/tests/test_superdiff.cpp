#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2g/superdiff.hpp"

using namespace s2g;

TEST_CASE("algebra-matrix round trip for both algebras") {
  Rng rng(601);
  for (std::size_t dim : {3u, 6u}) {
    for (int s = 0; s < 50; ++s) {
      Algebra a = random_algebra(rng, dim);
      Algebra b = matrix_to_alg(alg_matrix(a));
      for (std::size_t d = 0; d < dim; ++d) CHECK(b.c[d] == doctest::Approx(a.c[d]).epsilon(1e-14));
    }
  }
}

TEST_CASE("descent group data satisfies its cocycle identity exactly") {
  Rng rng(602);
  for (std::size_t dim : {3u, 6u}) {
    for (int s = 0; s < 100; ++s) {
      DescentData d = build_descent_cocycle(random_algebra(rng, dim), uniform(rng, -1.0, 1.0), 1.0);
      CHECK(sub(mul(d.v01, d.v12), d.v02).max_abs() == 0.0);
    }
  }
}

TEST_CASE("both differentiation routes agree for random moduli") {
  for (std::size_t dim : {3u, 6u}) {
    Rng rng(603 + dim);
    for (int s = 0; s < 200; ++s) {
      ModuliPoint p = random_moduli(rng, dim);
      DiffReport r = differentiate(p.omega, p.psi, uniform(rng, 0.5, 3.0));
      CHECK(r.r_omega < 1e-13);
      CHECK(r.r_psi < 1e-13);
      CHECK(r.r_vcocycle == 0.0);
    }
  }
}

TEST_CASE("trilinear circle coefficient vanishes on these algebras") {
  // <w, [w, w]> is a trace of w^3 against the invariant pairing; for the
  // compact real forms here it is identically zero.
  Rng rng(605);
  for (std::size_t dim : {3u, 6u})
    for (int s = 0; s < 100; ++s)
      CHECK(std::abs(lambda3_scalar(alg_matrix(random_algebra(rng, dim)), 2.0)) < 1e-13);
}

TEST_CASE("equivalence transforms keep both descent relations") {
  for (std::size_t dim : {3u, 6u}) {
    Rng rng(607 + dim);
    for (int s = 0; s < 200; ++s) {
      ModuliPoint p = random_moduli(rng, dim);
      CoboundaryModuli c = random_coboundary_moduli(rng, dim);
      EquivalenceReport r = equivalence_transform(p, c, 1.0);
      CHECK(r.r_group < 1e-12);
      CHECK(r.r_circle < 1e-12);
    }
  }
}

TEST_CASE("the transformed modulus is the twisted conjugate plus shift") {
  Rng rng(611);
  ModuliPoint p = random_moduli(rng, 3);
  CoboundaryModuli c = random_coboundary_moduli(rng, 3);
  EquivalenceReport r = equivalence_transform(p, c, 1.0);
  Eigen::MatrixXcd B = alg_matrix(c.b).exp();
  Eigen::MatrixXcd expect = B.inverse() * alg_matrix(p.omega) * B + alg_matrix(c.delta);
  CHECK((alg_matrix(r.out.omega) - expect).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("the identity coboundary leaves the moduli fixed") {
  Rng rng(612);
  ModuliPoint p = random_moduli(rng, 3);
  CoboundaryModuli c;  // b = delta = 0, zeta = dzeta = 0
  c.b = Algebra(3);
  c.delta = Algebra(3);
  EquivalenceReport r = equivalence_transform(p, c, 1.0);
  for (std::size_t d = 0; d < 3; ++d)
    CHECK(r.out.omega.c[d] == doctest::Approx(p.omega.c[d]).epsilon(1e-13));
  CHECK(r.out.psi == doctest::Approx(p.psi).epsilon(1e-13));
}
