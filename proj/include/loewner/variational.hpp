#pragma once

// Second-variation system along the base trajectory.
//
// Perturbing the initial adjoint by Psi2(0) = p, Psi4(0) = q and
// differentiating the coefficient system gives 15 linear-in-structure ODEs:
//
//   y1..y3   = (x1, x3, x5)_pp      y4, y5, y6 = (x2)_p, (x4)_p, (Psi2)_p
//   y7..y9   = (x1, x3, x5)_qq      y10..y12   = (x2)_q, (x4)_q, (Psi2)_q
//   y13..y15 = (x1, x3, x5)_pq
//
// Components are stored 0-based: y1 is s(0), y15 is s(14).

#include <Eigen/Core>

#include "loewner/integrator.hpp"
#include "loewner/problem.hpp"

namespace loewner {

using VarState = Eigen::Matrix<double, 15, 1>;
using Vec3 = Eigen::Vector3d;

struct ControlDerivs {
  double up = 0.0;
  double uq = 0.0;
};

/// Hessian of F(p, q) at the origin.
struct HessianF {
  double fpp = 0.0;
  double fqq = 0.0;
  double fpq = 0.0;

  double det() const noexcept { return fpp * fqq - fpq * fpq; }
  friend bool operator==(const HessianF&, const HessianF&) = default;
};

/// Per-variant data of the shared right-hand side:
///   u_p = (c(t) 2 y4 + 2 d y5 - y6) / Delta(t)
///   u_q = (c(t) 2 y10 + 2 d y11 - y12 + 2(1 - 3t)) / Delta(t)
///   y6' = -4 k(t) u_p - 4 e y4,   y12' = -4 k(t) u_q - 4 e y10 - 4
/// with c, k affine and Delta quadratic in t.
struct VariationalCoefficients {
  double c0 = 0, c1 = 0;
  double d = 0;
  double q0 = 0, q1 = 0, q2 = 0;
  double k0 = 0, k1 = 0;
  double e = 0;
  ProblemSpec::Weights weights{};

  static VariationalCoefficients of(const ProblemSpec& spec);

  double c(double t) const { return c0 + c1 * t; }
  double delta(double t) const { return (q2 * t + q1) * t + q0; }
  double k(double t) const { return k0 + k1 * t; }
};

/// The 15-dimensional system for one spec. Cheap to copy.
class VariationalSystem {
 public:
  static constexpr double kDenominatorTol = 1e-12;

  explicit VariationalSystem(const ProblemSpec& spec);

  const ProblemSpec& spec() const { return spec_; }
  const VariationalCoefficients& coefficients() const { return coef_; }

  /// y6(0) = 1, everything else 0.
  static VarState initial_state();

  ControlDerivs control(double t, const VarState& s) const;
  VarState operator()(double t, const VarState& s) const;

  /// The (y4, y5, y6) block on its own; it does not see y1..y3.
  Vec3 p_subsystem(double t, const Vec3& y456) const;

  HessianF assemble(const VarState& terminal) const;

 private:
  double inverse_delta(double t) const;

  ProblemSpec spec_;
  VariationalCoefficients coef_;
};

ControlDerivs control_derivs(const ProblemSpec& spec, double t, const VarState& s);
VarState variational_rhs(const ProblemSpec& spec, double t, const VarState& s);

/// Integrates the variational system over [0, T].
IntegrationResult<VarState> integrate_variational(const ProblemSpec& spec, const IntegratorOptions& integ);

/// F_pp, F_qq, F_pq at the origin from the terminal variational state.
HessianF hessian_of_F(const ProblemSpec& spec, const IntegratorOptions& integ = {});

}  // namespace loewner
