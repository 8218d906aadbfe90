#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loewner/admissibility.hpp"
#include "loewner/closed_form.hpp"
#include "loewner/errors.hpp"
#include "loewner/variational.hpp"

using namespace loewner;

TEST_CASE("sigma32 closed form") {
  const double e = std::numbers::e;
  CHECK(sigma32() == doctest::Approx((e - 1) / (4 * e)).epsilon(1e-15));
  CHECK(std::abs(sigma32() - 0.15803014) <= 1e-8);
  CHECK(std::abs(fpp_closed(-sigma32(), INFINITY)) < 1e-14);
  CHECK(fpp_closed(-sigma32() + 1e-6, INFINITY) < 0);
  CHECK(fpp_closed(-sigma32() - 1e-6, INFINITY) > 0);
}

TEST_CASE("closed form values and limits") {
  CHECK(fpp_closed(0.0, INFINITY) == -2.0);
  CHECK(fpp_closed(1e-12, INFINITY) == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(fpp_closed(-0.1, INFINITY) == doctest::Approx(-1.24941402935).epsilon(1e-11));
  CHECK(fpp_closed(0.0, 25.0) == doctest::Approx(-2 * 0.96));
  CHECK(y4_closed(-0.1, INFINITY, 1.0) == doctest::Approx(std::log(0.6) / -0.2).epsilon(1e-14));
  CHECK(y4_closed(-0.1, INFINITY, 1.0) == doctest::Approx(2.554128).epsilon(1e-6));
  CHECK(y1_closed(1e-12, INFINITY, 0.7) == doctest::Approx(-1.4));
  CHECK(y4_closed(1e-12, INFINITY, 0.7) == doctest::Approx(1.4));
  CHECK(y1_closed(-0.2, 30.0, 0.0) == 0.0);
  CHECK(y4_closed(-0.2, 30.0, 0.0) == 0.0);
  CHECK(up_closed(-0.1, INFINITY, 0.5) == doctest::Approx(-1 / 0.8));
  CHECK_THROWS_AS(fpp_closed(-0.3, INFINITY), InvalidArgument);
  CHECK_THROWS_AS(up_closed(-0.25, INFINITY, 1.0), InvalidArgument);
}

TEST_CASE("criterion sign matches F_pp sign") {
  for (double M : {11.0, 25.0, 100.0, kInf}) {
    for (double mu = -0.24; mu <= 1.0; mu += 0.02) {
      const auto r = closed_form_criterion(mu, M);
      CHECK(r.criterion_lhs == -r.fpp);
      CHECK(r.pick_is_local_max == (r.fpp < 0));
      CHECK(r.pick_is_local_max == (r.criterion_lhs > 0));
    }
  }
}

TEST_CASE("pipeline matches the closed form on an admissible grid") {
  for (double M : {11.0, 25.0, 100.0, kInf}) {
    for (double mu : {-0.2, -0.15, -0.1, -0.05, 0.05, 0.1, 0.3}) {
      const auto spec = ProblemSpec::linear(mu, 0, M);
      if (!check_admissible(spec).admissible) continue;
      CAPTURE(mu);
      CAPTURE(M);
      CHECK(std::abs(hessian_of_F(spec).fpp - fpp_closed(mu, M)) <= 1e-8);
    }
  }
}
