#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "s2g/group.hpp"
#include "s2g/rng.hpp"

using namespace s2g;

namespace {
double mat_dist(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("quaternion product matches the 2x2 matrix representation") {
  Rng rng(101);
  for (int s = 0; s < 200; ++s) {
    SU2 a = random_su2(rng), b = random_su2(rng);
    CHECK(mat_dist(to_matrix(mul(a, b)), to_matrix(a) * to_matrix(b)) < 1e-13);
  }
}

TEST_CASE("inverse is the conjugate and a two-sided unit") {
  Rng rng(102);
  for (int s = 0; s < 200; ++s) {
    SU2 a = random_su2(rng);
    CHECK(dist(mul(a, inv(a)), su2_identity()) < 1e-14);
    CHECK(dist(mul(inv(a), a), su2_identity()) < 1e-14);
    CHECK(mat_dist(to_matrix(inv(a)), to_matrix(a).adjoint()) < 1e-14);
  }
}

TEST_CASE("products with the identity are bitwise exact") {
  Rng rng(103);
  for (int s = 0; s < 50; ++s) {
    SU2 a = random_su2(rng);
    SU2 l = mul(su2_identity(), a), r = mul(a, su2_identity());
    CHECK(l.x == a.x);
    CHECK(l.y == a.y);
    CHECK(l.z == a.z);
    CHECK(l.w == a.w);
    CHECK(r.x == a.x);
    CHECK(r.w == a.w);
  }
}

TEST_CASE("algebra bracket matches the matrix commutator") {
  Rng rng(104);
  for (int s = 0; s < 200; ++s) {
    Algebra a = random_algebra(rng, 3), b = random_algebra(rng, 3);
    Eigen::MatrixXcd A = su2_alg_matrix(a), B = su2_alg_matrix(b);
    Eigen::MatrixXcd comm = A * B - B * A;
    CHECK((su2_alg_matrix(bracket(a, b)) - comm).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("basis bracket values") {
  // [e_0, e_1] = -2 e_2 and cyclic
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    Algebra br = bracket(su2_basis(i), su2_basis(j));
    Algebra expect = scale(-2.0, su2_basis(k));
    for (int d = 0; d < 3; ++d)
      CHECK(br.c[static_cast<std::size_t>(d)] ==
            doctest::Approx(expect.c[static_cast<std::size_t>(d)]).epsilon(1e-14));
  }
}

TEST_CASE("pairing is -1/2 tr and the basis Gram matrix is the identity") {
  Rng rng(105);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(killing(su2_basis(i), su2_basis(j)) == doctest::Approx(i == j ? 1.0 : 0.0));
  for (int s = 0; s < 100; ++s) {
    Algebra a = random_algebra(rng, 3), b = random_algebra(rng, 3);
    double tr = std::real((su2_alg_matrix(a) * su2_alg_matrix(b)).trace());
    CHECK(killing(a, b) == doctest::Approx(-0.5 * tr).epsilon(1e-12));
  }
}

TEST_CASE("exponential matches the matrix exponential") {
  Rng rng(106);
  for (int s = 0; s < 100; ++s) {
    Algebra a = random_algebra(rng, 3, 0.8);
    Eigen::MatrixXcd expm = su2_alg_matrix(a).exp();
    CHECK(mat_dist(to_matrix(exp_su2(a)), expm) < 1e-12);
  }
}

TEST_CASE("logarithm inverts the exponential on the principal branch") {
  Rng rng(107);
  for (int s = 0; s < 200; ++s) {
    Algebra a = random_algebra(rng, 3);
    double n = anorm(a);
    a = scale(uniform(rng, 0.0, 1.5) / (n > 0 ? n : 1.0), a);  // |a| < pi/2 keeps x > 0
    Algebra b = log_su2(exp_su2(a));
    for (int d = 0; d < 3; ++d)
      CHECK(b.c[static_cast<std::size_t>(d)] ==
            doctest::Approx(a.c[static_cast<std::size_t>(d)]).epsilon(1e-10));
  }
  CHECK_THROWS_AS(log_su2(SU2{-1.0, 0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("spin(4) block structure") {
  Rng rng(108);
  for (int s = 0; s < 100; ++s) {
    Algebra a = random_algebra(rng, 6), b = random_algebra(rng, 6);
    Eigen::MatrixXcd A = spin4_alg_matrix(a), B = spin4_alg_matrix(b);
    CHECK((spin4_alg_matrix(bracket(a, b)) - (A * B - B * A)).cwiseAbs().maxCoeff() < 1e-13);
    double tr = std::real((A * B).trace());
    CHECK(killing(a, b) == doctest::Approx(-0.5 * tr).epsilon(1e-12));
    // off-diagonal blocks stay zero
    CHECK(A.block<2, 2>(0, 2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(A.block<2, 2>(2, 0).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("norm drift is repaired only past the tolerance") {
  SU2 g{1.0 + 5e-12, 0.0, 0.0, 0.0};
  SU2 h = mul(g, su2_identity());
  CHECK(h.x == g.x);  // below threshold: untouched
}
