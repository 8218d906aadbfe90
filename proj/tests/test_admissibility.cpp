#include <doctest.h>

#include <cmath>

#include "loewner/admissibility.hpp"
#include "loewner/errors.hpp"

using namespace loewner;

TEST_CASE("admissible and inadmissible examples") {
  const auto koebe = check_admissible(ProblemSpec::linear(0, 0));
  CHECK(koebe.admissible);
  CHECK_FALSE(koebe.indeterminate);
  CHECK(koebe.min_gap > 0);
  CHECK(koebe.min_abs_huu == doctest::Approx(2.0));
  CHECK(koebe.grid_n == kDefaultAdmissibilityGrid);
  CHECK_FALSE(check_admissible(ProblemSpec::linear(-0.26, 0)).admissible);
  CHECK_FALSE(check_admissible(ProblemSpec::sigma34(-0.9)).admissible);
  CHECK(check_admissible(ProblemSpec::sigma34(-0.8)).admissible);
  CHECK(check_admissible(ProblemSpec::a4_bound(25)).admissible);
  CHECK_THROWS_AS(require_admissible(ProblemSpec::sigma24(-1.2)), AdmissibilityError);
  CHECK_NOTHROW(require_admissible(ProblemSpec::sigma24(-0.9)));
  CHECK_THROWS_AS(check_admissible(ProblemSpec::linear(0, 0), 1), InvalidArgument);
}

TEST_CASE("report invariant: admissible iff both margins positive") {
  for (double mu : {-0.3, -0.2, 0.0, 0.4}) {
    for (double nu : {-0.15, -0.05, 0.0, 0.2}) {
      const auto r = check_admissible(ProblemSpec::linear(mu, nu, 40));
      CHECK(r.admissible == (r.min_gap > 0 && r.min_abs_huu > 0 && !r.indeterminate));
    }
  }
}

TEST_CASE("published domain boundaries") {
  auto near = [](double x, double target) { return std::abs(x - target) <= 1e-4; };
  CHECK(near(boundary_scan(ProblemSpec::linear(0, 0), Axis::Mu, {-0.3, 0}, 1e-9), -0.25));
  CHECK(near(boundary_scan(ProblemSpec::linear(0, 0), Axis::Nu, {-0.3, 0}, 1e-9), -0.1));
  CHECK(near(boundary_scan(ProblemSpec::sigma24(0), Axis::Nu, {-1.5, 0}, 1e-9), -1.0));
  CHECK(near(boundary_scan(ProblemSpec::sigma34(0), Axis::Mu, {-1.5, 0}, 1e-9), -2 * (std::sqrt(2.0) - 1)));
  CHECK(near(boundary_scan(ProblemSpec::a4_bound(50), Axis::M, {1.5, 50}, 1e-9), 11.0));
  CHECK_THROWS_AS(boundary_scan(ProblemSpec::linear(0, 0), Axis::Mu, {-0.1, 0}, 1e-9), InvalidArgument);
}

TEST_CASE("admissibility is preserved when scaling toward the origin") {
  // Sampled rays in the (mu, nu)-plane.
  for (int k = 0; k < 24; ++k) {
    const double angle = 2 * M_PI * k / 24;
    for (double M : {15.0, 40.0, kInf}) {
      for (double radius : {0.05, 0.1, 0.2, 0.4}) {
        const double mu = radius * std::cos(angle), nu = radius * std::sin(angle);
        if (!check_admissible(ProblemSpec::linear(mu, nu, M), 512).admissible) continue;
        for (double s : {0.25, 0.5, 0.75}) {
          CAPTURE(mu);
          CAPTURE(nu);
          CAPTURE(s);
          CHECK(check_admissible(ProblemSpec::linear(s * mu, s * nu, M), 512).admissible);
        }
      }
    }
  }
}

TEST_CASE("report is deterministic") {
  const auto spec = ProblemSpec::linear(-0.1, -0.05, 30);
  CHECK(check_admissible(spec) == check_admissible(spec));
}
