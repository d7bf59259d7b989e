#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2g/sds.hpp"

using namespace s2g;

TEST_CASE("analytic differential of the profile matches finite differences") {
  FormField num = ext_d(phi_field(), 1e-4);
  FormField ana = dphi_analytic();
  int excluded = 0;
  std::vector<P4> pts = sds_sample_points(801, 64, &excluded);
  CHECK(form_max_diff(num, ana, pts) < 1e-5);
}

TEST_CASE("profile is harmonic away from the origin at the h^2 scale") {
  int excluded = 0;
  std::vector<P4> pts = sds_sample_points(802, 64, &excluded);
  double r1 = laplacian_residual(pts, 1e-3);
  double r2 = laplacian_residual(pts, 2e-3);
  CHECK(r1 < 1.0);  // ~ C h^2 with C ~ 4e2 here
  CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("sample points avoid the coordinate hyperplanes") {
  int excluded = 0;
  std::vector<P4> pts = sds_sample_points(803, 128, &excluded);
  for (const auto& x : pts) {
    double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    CHECK(r >= 0.5);
    CHECK(r <= 2.0);
    for (double c : x) CHECK(std::abs(c) / r > 0.1);
  }
}

TEST_CASE("abelian two-form solution satisfies the self-duality equation") {
  SdsConfig cfg;
  cfg.solution = 1;
  cfg.h = 2e-3;
  cfg.samples = 96;
  SdsReport r = sds_verify(cfg);
  CHECK(r.pass);
  CHECK(r.order >= 1.9);
  CHECK(r.reading == "quarter");
  CHECK(r.residual_max < 1000.0 * cfg.h * cfg.h);
  CHECK(r.flatness == 0.0);
}

TEST_CASE("the face-value coefficient reading fails the same equation") {
  SdsConfig cfg;
  cfg.solution = 1;
  cfg.h = 2e-3;
  cfg.samples = 96;
  cfg.literal_reading = true;
  SdsReport r = sds_verify(cfg);
  CHECK_FALSE(r.pass);
  CHECK(r.reading == "literal");
  CHECK(r.residual_max > 1.0);
}

TEST_CASE("pure-gauge solution satisfies flatness and self-duality") {
  SdsConfig cfg;
  cfg.solution = 2;
  cfg.h = 2e-3;
  cfg.samples = 64;
  SdsReport r = sds_verify(cfg);
  CHECK(r.pass);
  CHECK(r.order >= 1.9);
  CHECK(r.flatness < 1000.0 * cfg.h * cfg.h);
}

TEST_CASE("first-order gauge updates leave residuals at second order") {
  GaugeSlopeReport r = gauge_slope_check(42, 2e-4);
  CHECK(r.pass);
  CHECK(r.slope >= 1.9);
  REQUIRE(r.residual.size() == 3);
  CHECK(r.residual[0] > r.residual[1]);
  CHECK(r.residual[1] > r.residual[2]);
}
