#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2g/grassmann.hpp"
#include "s2g/rng.hpp"

using namespace s2g;
using Mat = Grassmann::Mat;

namespace {
Mat rmat(Rng& rng, int d) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  return m;
}

Grassmann random_element(Rng& rng, int ngen, int d, int parity = -1) {
  Grassmann g(ngen, d);
  for (unsigned mask = 0; mask < (1u << ngen); ++mask) {
    int p = (parity >= 0) ? (parity + popcount(mask)) % 2 : (gauss(rng) > 0 ? 1 : 0);
    g.add_term(mask, p, rmat(rng, d));
  }
  return g;
}
}  // namespace

TEST_CASE("merge sign reproduces sorted-insertion parity") {
  // theta_1 theta_0 = - theta_0 theta_1
  CHECK(merge_sign(0b10u, 0b01u, 2) == -1);
  CHECK(merge_sign(0b01u, 0b10u, 2) == 1);
  CHECK(merge_sign(0b01u, 0b01u, 2) == 0);  // theta^2 = 0
  CHECK(merge_sign(0b101u, 0b010u, 3) == -1);
  CHECK(merge_sign(0b100u, 0b011u, 3) == 1);
}

TEST_CASE("generators anticommute and square to zero, up to four generators") {
  for (int ngen = 2; ngen <= 4; ++ngen) {
    Mat id = Mat::Identity(1, 1);
    for (int i = 0; i < ngen; ++i) {
      Grassmann ti = Grassmann::monomial(ngen, 1u << i, id, 0);
      CHECK(mul(ti, ti).max_abs() == 0.0);
      for (int j = 0; j < ngen; ++j) {
        if (i == j) continue;
        Grassmann tj = Grassmann::monomial(ngen, 1u << j, id, 0);
        CHECK(add(mul(ti, tj), mul(tj, ti)).max_abs() == 0.0);
      }
    }
  }
}

TEST_CASE("an odd coefficient anticommutes with a generator") {
  Mat c = Mat::Identity(2, 2) * 1.7;
  Grassmann co = Grassmann::constant(3, c, 1);  // odd coefficient parity
  Grassmann t0 = Grassmann::monomial(3, 0b001u, Mat::Identity(2, 2), 0);
  CHECK(add(mul(t0, co), mul(co, t0)).max_abs() == 0.0);
  Grassmann ce = Grassmann::constant(3, c, 0);
  CHECK(sub(mul(t0, ce), mul(ce, t0)).max_abs() == 0.0);
}

TEST_CASE("multiplication is associative") {
  Rng rng(501);
  for (int trial = 0; trial < 20; ++trial) {
    Grassmann a = random_element(rng, 3, 2), b = random_element(rng, 3, 2),
              c = random_element(rng, 3, 2);
    CHECK(sub(mul(mul(a, b), c), mul(a, mul(b, c))).max_abs() < 1e-10);
  }
}

TEST_CASE("the graded bracket is graded-antisymmetric") {
  Rng rng(502);
  for (int trial = 0; trial < 20; ++trial) {
    for (int pa : {0, 1})
      for (int pb : {0, 1}) {
        Grassmann a = random_element(rng, 3, 2, pa), b = random_element(rng, 3, 2, pb);
        Grassmann lhs = graded_bracket(a, b);
        Grassmann rhs = scale((pa && pb) ? 1.0 : -1.0, graded_bracket(b, a));
        CHECK(sub(lhs, rhs).max_abs() < 1e-10);
      }
  }
}

TEST_CASE("the bracket of even elements is the commutator") {
  Rng rng(503);
  Grassmann a = random_element(rng, 3, 2, 0), b = random_element(rng, 3, 2, 0);
  Grassmann comm = sub(mul(a, b), mul(b, a));
  CHECK(sub(graded_bracket(a, b), comm).max_abs() < 1e-12);
}

TEST_CASE("the derivation is odd and squares to zero") {
  Rng rng(504);
  for (int trial = 0; trial < 20; ++trial) {
    Grassmann a = random_element(rng, 4, 2);
    CHECK(d_K(d_K(a)).max_abs() < 1e-12);
  }
}

TEST_CASE("the derivation satisfies the graded Leibniz rule") {
  Rng rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    for (int pa : {0, 1}) {
      Grassmann a = random_element(rng, 3, 2, pa);
      Grassmann b = random_element(rng, 3, 2);
      Grassmann lhs = d_K(mul(a, b));
      Grassmann rhs = add(mul(d_K(a), b), scale(pa ? -1.0 : 1.0, mul(a, d_K(b))));
      CHECK(sub(lhs, rhs).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("single-monomial derivative values") {
  Mat id = Mat::Identity(1, 1);
  // d_K(theta_0 theta_1) = theta_1 - theta_0
  Grassmann m = Grassmann::monomial(2, 0b011u, id, 0);
  Grassmann d = d_K(m);
  CHECK((d.coeff(0b010u, 0) - id).cwiseAbs().maxCoeff() == 0.0);
  CHECK((d.coeff(0b001u, 0) + id).cwiseAbs().maxCoeff() == 0.0);
  // odd coefficient flips the sign
  Grassmann mo = Grassmann::monomial(2, 0b001u, id, 1);
  CHECK((d_K(mo).coeff(0u, 1) + id).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("logarithm of a nilpotent perturbation of the identity") {
  Rng rng(506);
  int d = 2;
  // X = 1 + N with N strictly nilpotent; exp(log X) must reproduce X
  Grassmann n(3, d);
  for (unsigned mask = 1; mask < 8; ++mask) n.add_term(mask, popcount(mask) % 2 ? 1 : 0, rmat(rng, d));
  Grassmann x = add(Grassmann::unit(3, d), n);
  Grassmann l = grassmann_log(x, Mat::Zero(d, d));
  // exp via the truncated series
  Grassmann e = Grassmann::unit(3, d);
  Grassmann pow = Grassmann::unit(3, d);
  double fact = 1.0;
  for (int k = 1; k <= 4; ++k) {
    pow = mul(pow, l);
    fact *= k;
    e = add(e, scale(1.0 / fact, pow));
  }
  CHECK(sub(e, x).max_abs() < 1e-10);
}

TEST_CASE("scalar pairing matches the trace formula on constants") {
  Rng rng(507);
  Mat a = rmat(rng, 2), b = rmat(rng, 2);
  Grassmann ga = Grassmann::constant(3, a), gb = Grassmann::constant(3, b);
  Grassmann p = killing_pair(ga, gb, 2.5);
  std::complex<double> expect = 2.5 * (-0.5) * (a * b).trace();
  CHECK(std::abs(p.coeff(0u, 0)(0, 0) - expect) < 1e-12);
}
