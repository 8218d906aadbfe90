#include "loewner/variational.hpp"

#include <cmath>

#include "loewner/errors.hpp"

namespace loewner {

VariationalCoefficients VariationalCoefficients::of(const ProblemSpec& spec) {
  const double m = spec.inv_M();
  const double mu = spec.mu, nu = spec.nu;
  VariationalCoefficients k;
  k.weights = spec.objective_weights();
  switch (spec.variant) {
    case Variant::LFunctional:
      k.c0 = (3 - 4 * m) * nu + mu;
      k.c1 = -5 * nu;
      k.d = nu;
      k.q2 = 16 * nu;
      k.q1 = -4 * (2 * nu + 4 * nu * m - mu);
      k.q0 = 2 * nu + 1 - 4 * (2 * nu + mu) * m + 15 * nu * m * m;
      k.k0 = nu * (1 - 4 * m) + mu;
      k.k1 = nu;
      k.e = nu;
      break;
    case Variant::Sigma24:
      k.c0 = 3;
      k.c1 = -5;
      k.d = 1;
      k.q2 = 16;
      k.q1 = -8;
      k.q0 = nu + 2;
      k.k0 = 1;
      k.k1 = 1;
      k.e = 1;
      break;
    case Variant::Sigma34:
      k.c0 = 3 + mu;
      k.c1 = -5;
      k.d = 1;
      k.q2 = 16;
      k.q1 = -(8 - 4 * mu);
      k.q0 = 2;
      k.k0 = 1 + mu;
      k.k1 = 1;
      k.e = 1;
      break;
    case Variant::A4Bound:
      k.c0 = 3 - 4 * m;
      k.c1 = -5;
      k.d = 1;
      k.q2 = 16;
      k.q1 = -(8 + 16 * m);
      k.q0 = 2 - 8 * m + 15 * m * m;
      k.k0 = 1 - 4 * m;
      k.k1 = 1;
      k.e = 1;
      break;
  }
  return k;
}

VariationalSystem::VariationalSystem(const ProblemSpec& spec) : spec_(spec), coef_(VariationalCoefficients::of(spec)) {}

VarState VariationalSystem::initial_state() {
  VarState s = VarState::Zero();
  s(5) = 1.0;
  return s;
}

double VariationalSystem::inverse_delta(double t) const {
  const double delta = coef_.delta(t);
  if (std::abs(delta) < kDenominatorTol) throw DenominatorVanishing(t);
  return 1.0 / delta;
}

ControlDerivs VariationalSystem::control(double t, const VarState& s) const {
  const double inv = inverse_delta(t);
  const double c = coef_.c(t);
  return {(c * 2 * s(3) + 2 * coef_.d * s(4) - s(5)) * inv,
          (c * 2 * s(9) + 2 * coef_.d * s(10) - s(11) + 2 * (1 - 3 * t)) * inv};
}

VarState VariationalSystem::operator()(double t, const VarState& s) const {
  const auto [up, uq] = control(t, s);
  const double poly = (47 * t - 46) * t + 9;
  const double k = coef_.k(t);
  const double e = coef_.e;
  VarState ds;
  // pp block
  ds(0) = -2 * up * up;
  ds(1) = 4 * (s(0) + 2 * s(3) * up - 2 * (2 * t - 1) * up * up);
  ds(2) = 2 * (7 * t - 3) * s(0) + 4 * s(1) - 4 * s(3) * s(3) + 8 * (5 * t - 3) * s(3) * up + 8 * s(4) * up -
          2 * poly * up * up;
  ds(3) = -2 * up;
  ds(4) = 4 * (s(3) + (1 - 3 * t) * up);
  ds(5) = -4 * k * up - 4 * e * s(3);
  // qq block
  ds(6) = -2 * uq * uq;
  ds(7) = 4 * (s(6) + 2 * s(9) * uq - 2 * (2 * t - 1) * uq * uq);
  ds(8) = 2 * (7 * t - 3) * s(6) + 4 * s(7) - 4 * s(9) * s(9) + 8 * (5 * t - 3) * s(9) * uq + 8 * s(10) * uq -
          2 * poly * uq * uq;
  ds(9) = -2 * uq;
  ds(10) = 4 * (s(9) + (1 - 3 * t) * uq);
  ds(11) = -4 * k * uq - 4 * e * s(9) - 4;
  // pq block
  ds(12) = -2 * up * uq;
  ds(13) = 4 * (s(12) + s(3) * uq + s(9) * up) - 8 * (2 * t - 1) * up * uq;
  ds(14) = 2 * (7 * t - 3) * s(12) + 4 * s(13) - 4 * s(3) * s(9) + 4 * (5 * t - 3) * (s(3) * uq + s(9) * up) +
           4 * s(4) * uq + 4 * s(10) * up - 2 * poly * up * uq;
  return ds;
}

Vec3 VariationalSystem::p_subsystem(double t, const Vec3& y) const {
  const double up = (coef_.c(t) * 2 * y(0) + 2 * coef_.d * y(1) - y(2)) * inverse_delta(t);
  Vec3 dy;
  dy(0) = -2 * up;
  dy(1) = 4 * (y(0) + (1 - 3 * t) * up);
  dy(2) = -4 * coef_.k(t) * up - 4 * coef_.e * y(0);
  return dy;
}

HessianF VariationalSystem::assemble(const VarState& y) const {
  const auto& w = coef_.weights;
  return {w.x1 * y(0) + w.x3 * y(1) + w.x5 * y(2), w.x1 * y(6) + w.x3 * y(7) + w.x5 * y(8),
          w.x1 * y(12) + w.x3 * y(13) + w.x5 * y(14)};
}

ControlDerivs control_derivs(const ProblemSpec& spec, double t, const VarState& s) {
  return VariationalSystem(spec).control(checked_time(spec, t), s);
}

VarState variational_rhs(const ProblemSpec& spec, double t, const VarState& s) {
  return VariationalSystem(spec)(t, s);
}

IntegrationResult<VarState> integrate_variational(const ProblemSpec& spec, const IntegratorOptions& integ) {
  const VariationalSystem sys(spec);
  return integrate(sys, VariationalSystem::initial_state(), 0.0, spec.horizon(), integ);
}

HessianF hessian_of_F(const ProblemSpec& spec, const IntegratorOptions& integ) {
  IntegratorOptions opts = integ;
  opts.record_trajectory = false;
  return VariationalSystem(spec).assemble(integrate_variational(spec, opts).y);
}

}  // namespace loewner
