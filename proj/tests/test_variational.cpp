#include <doctest.h>

#include <cmath>

#include "loewner/closed_form.hpp"
#include "loewner/errors.hpp"
#include "loewner/variational.hpp"

using namespace loewner;

TEST_CASE("control derivatives at the initial state") {
  const VarState s0 = VariationalSystem::initial_state();
  CHECK(s0(5) == 1.0);
  CHECK(s0.sum() == 1.0);
  const auto c = control_derivs(ProblemSpec::linear(0, 0), 0.0, s0);
  CHECK(c.up == doctest::Approx(-1.0));
  CHECK(c.uq == doctest::Approx(2.0));
  CHECK(control_derivs(ProblemSpec::sigma24(0), 0.0, s0).up == doctest::Approx(-0.5));
}

TEST_CASE("right-hand side at the initial state") {
  const VarState d = variational_rhs(ProblemSpec::linear(0, 0), 0.0, VariationalSystem::initial_state());
  CHECK(d(0) == doctest::Approx(-2.0));
  CHECK(d(3) == doctest::Approx(2.0));
  CHECK(d(5) == doctest::Approx(0.0));
  CHECK(d(9) == doctest::Approx(-4.0));
  // The y6/y12 coupling k(t) = nu (t + 1 - 4/M) + mu vanishes here, leaving only the constant.
  CHECK(d(11) == doctest::Approx(-4.0));
  CHECK(d(12) == doctest::Approx(4.0));
  const VarState d24 = variational_rhs(ProblemSpec::sigma24(0), 0.0, VariationalSystem::initial_state());
  CHECK(d24(11) == doctest::Approx(-8.0));
}

TEST_CASE("coefficient table reduces consistently") {
  // L with nu = 1, M = inf shares the y4/y5 structure of the other variants.
  const auto l = VariationalCoefficients::of(ProblemSpec::linear(0, 1));
  const auto s34 = VariationalCoefficients::of(ProblemSpec::sigma34(0));
  CHECK(l.c0 == s34.c0);
  CHECK(l.c1 == s34.c1);
  CHECK(l.k0 == s34.k0);
  const auto a4 = VariationalCoefficients::of(ProblemSpec::a4_bound(25));
  CHECK(a4.delta(0.3) == doctest::Approx(16 * 0.09 - (8 + 16.0 / 25) * 0.3 + 2 - 8.0 / 25 + 15.0 / 625));
  CHECK(VariationalCoefficients::of(ProblemSpec::sigma24(-0.4)).delta(0.0) == doctest::Approx(1.6));
}

TEST_CASE("nu = 0 identities along the trajectory") {
  for (double M : {11.0, 25.0, kInf}) {
    for (double mu : {-0.2, -0.1, 0.15}) {
      const auto spec = ProblemSpec::linear(mu, 0, M);
      const auto run = integrate_variational(spec, {Method::RK4, 2000, true});
      for (std::size_t i = 0; i < run.times.size(); i += 50) {
        const double t = run.times[i];
        const VarState& s = run.trajectory[i];
        CHECK(std::abs(s(5) - (2 * mu * s(3) + 1)) <= 1e-10);
        CHECK(std::abs(s(0) - y1_closed(mu, M, t)) <= 1e-8);
        CHECK(std::abs(s(3) - y4_closed(mu, M, t)) <= 1e-8);
        CHECK(control_derivs(spec, t, s).up == doctest::Approx(up_closed(mu, M, t)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("p-subsystem evolves independently, bitwise") {
  for (const auto& spec : {ProblemSpec::linear(-0.1, -0.05), ProblemSpec::sigma34(-0.5), ProblemSpec::a4_bound(20)}) {
    const VariationalSystem sys(spec);
    for (Method m : {Method::RK4, Method::ABM4}) {
      const IntegratorOptions opts{m, 500, false};
      const VarState full = integrate(sys, VariationalSystem::initial_state(), 0.0, spec.horizon(), opts).y;
      auto sub = [&](double t, const Vec3& y) { return sys.p_subsystem(t, y); };
      const Vec3 part = integrate(sub, Vec3(0, 0, 1), 0.0, spec.horizon(), opts).y;
      CHECK(part(0) == full(3));
      CHECK(part(1) == full(4));
      CHECK(part(2) == full(5));
    }
  }
}

TEST_CASE("Hessian reference values") {
  const HessianF koebe = hessian_of_F(ProblemSpec::linear(0, 0));
  CHECK(koebe.fpp == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(koebe.fqq == doctest::Approx(-8.0 / 3).epsilon(1e-12));
  CHECK(koebe.fpq == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(koebe.det() == doctest::Approx(koebe.fpp * koebe.fqq - koebe.fpq * koebe.fpq));
  const HessianF h = hessian_of_F(ProblemSpec::linear(-0.1, 0));
  CHECK(std::abs(h.fpp - fpp_closed(-0.1, INFINITY)) <= 1e-8);
  // Frozen regression values (20000 RK4 steps).
  CHECK(h.fpp == doctest::Approx(-1.24941402935).epsilon(1e-11));
  CHECK(h.fqq == doctest::Approx(-1.89426369011).epsilon(1e-11));
  CHECK(h.fpq == doctest::Approx(1.14350167429).epsilon(1e-11));
}

TEST_CASE("vanishing denominator is reported") {
  CHECK_THROWS_AS(hessian_of_F(ProblemSpec::a4_bound(11)), DenominatorVanishing);
  try {
    hessian_of_F(ProblemSpec::a4_bound(11));
  } catch (const DenominatorVanishing& e) {
    CHECK(e.t() > 0.0);
    CHECK(e.t() < 1.0);
  }
}

TEST_CASE("fourth-order convergence of Hessian entries") {
  const auto spec = ProblemSpec::sigma24(-0.5);
  auto at = [&](int n) { return hessian_of_F(spec, {Method::RK4, n, false}); };
  const HessianF a = at(50), b = at(100), c = at(200);
  CHECK(std::log2(std::abs(a.fqq - b.fqq) / std::abs(b.fqq - c.fqq)) == doctest::Approx(4.0).epsilon(0.05));
  CHECK(std::log2(std::abs(a.fpp - b.fpp) / std::abs(b.fpp - c.fpp)) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("Hessian evaluation is deterministic") {
  const auto spec = ProblemSpec::linear(0.1, -0.03, 40);
  CHECK(hessian_of_F(spec) == hessian_of_F(spec));
  CHECK(hessian_of_F(spec, {Method::ABM4, 1000, false}) == hessian_of_F(spec, {Method::ABM4, 1000, false}));
}
