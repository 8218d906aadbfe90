#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "loewner/errors.hpp"
#include "loewner/integrator.hpp"
#include "loewner/problem.hpp"
#include "loewner/variational.hpp"

using namespace loewner;
using Vec1 = Eigen::Matrix<double, 1, 1>;

namespace {
auto decay = [](double, const Vec1& y) -> Vec1 { return -y; };
}

TEST_CASE("exponential decay") {
  for (Method m : {Method::RK4, Method::ABM4}) {
    const Vec1 y = integrate(decay, Vec1(1.0), 0.0, 1.0, {m, 1000, false}).y;
    CHECK(std::abs(y(0) - std::exp(-1.0)) < 1e-12);
  }
}

TEST_CASE("RK4 is exact on a cubic right-hand side") {
  auto rhs = [](double t, const Eigen::Vector3d&) -> Eigen::Vector3d {
    return {2.0, 10 * t - 2, 42 * t * t - 24 * t + 2};
  };
  for (int steps : {1, 7, 100}) {
    const Eigen::Vector3d y = integrate(rhs, Eigen::Vector3d::Zero().eval(), 0.0, 1.0, {Method::RK4, steps, false}).y;
    CHECK((y - Eigen::Vector3d(2, 3, 4)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("empirical order is four") {
  CHECK(order_estimate(decay, Vec1(1.0), 0.0, 1.0, 20, Method::RK4) == doctest::Approx(4.0).epsilon(0.025));
  CHECK(order_estimate(decay, Vec1(1.0), 0.0, 1.0, 20, Method::ABM4) == doctest::Approx(4.0).epsilon(0.05));
  const VariationalSystem sys(ProblemSpec::sigma34(-0.5));
  CHECK(order_estimate(sys, VariationalSystem::initial_state(), 0.0, 1.0, 50, Method::RK4) >= 3.8);
}

TEST_CASE("step-halving on the sigma42 system shrinks the error sixteenfold") {
  const VariationalSystem sys(ProblemSpec::linear(0.0, -0.05));
  auto run = [&](int n) { return integrate(sys, VariationalSystem::initial_state(), 0.0, 1.0, {Method::RK4, n, false}).y; };
  const VarState ref = run(4000);
  const double e1 = (run(40) - ref).norm(), e2 = (run(80) - ref).norm();
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("trajectory recording and determinism") {
  const auto a = integrate(decay, Vec1(1.0), 0.0, 2.0, {Method::ABM4, 10, true});
  const auto b = integrate(decay, Vec1(1.0), 0.0, 2.0, {Method::ABM4, 10, true});
  REQUIRE(a.times.size() == 11);
  CHECK(a.times.front() == 0.0);
  CHECK(a.times.back() == 2.0);
  CHECK(a.trajectory.back()(0) == a.y(0));
  CHECK(a.y(0) == b.y(0));
}

TEST_CASE("option validation and error context") {
  CHECK_THROWS_AS(integrate(decay, Vec1(1.0), 0.0, 1.0, {Method::ABM4, 3, false}), InvalidArgument);
  CHECK_THROWS_AS(integrate(decay, Vec1(1.0), 0.0, 1.0, {Method::RK4, 0, false}), InvalidArgument);
  CHECK_THROWS_AS(integrate(decay, Vec1(1.0), 1.0, 0.0, {Method::RK4, 4, false}), InvalidArgument);
  CHECK(parse_method("abm4") == Method::ABM4);
  CHECK_THROWS_AS(parse_method("euler"), InvalidArgument);
  auto failing = [](double t, const Vec1& y) -> Vec1 {
    if (t > 0.5) throw NumericalError("blew up");
    return y;
  };
  try {
    integrate(failing, Vec1(1.0), 0.0, 1.0, {Method::RK4, 10, false});
    FAIL("expected a numerical error");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("t=0.5") != std::string::npos);
  }
}
