#pragma once

// Coefficient dynamics of the Loewner chain and the closed-form base
// (Koebe / Pick) trajectory.
//
// With a_k(t) = x_{2k-3} + i x_{2k-2} (k = 2, 3, 4) the Loewner equation in
// the time variable t in [0, 1] turns into a 5-dimensional real ODE for x,
// driven by a scalar control u(t). The control u = pi generates the Koebe
// function (M = inf) or the Pick function P_M (horizon T = 1 - 1/M).

#include <cmath>

#include <Eigen/Core>

#include "loewner/problem.hpp"

namespace loewner {

template <typename Scalar>
using Vector5 = Eigen::Matrix<Scalar, 5, 1>;
using Vec5 = Vector5<double>;

/// Right-hand side of the coefficient system (x1..x5) for control u.
template <typename Scalar>
Vector5<Scalar> state_rhs(Scalar t, const Vector5<Scalar>& x, Scalar u) {
  using std::cos;
  using std::sin;
  const Scalar c1 = cos(u), s1 = sin(u);
  const Scalar c2 = cos(2 * u), s2 = sin(2 * u);
  const Scalar c3 = cos(3 * u);
  const Scalar tm = t - 1;
  Vector5<Scalar> dx;
  dx(0) = -2 * c1;
  dx(1) = 2 * s1;
  dx(2) = -4 * (x(0) * c1 + x(1) * s1) + 2 * tm * c2;
  dx(3) = 4 * (x(0) * s1 - x(1) * c1) - 2 * tm * s2;
  dx(4) = -2 * ((2 * x(2) + x(0) * x(0) - x(1) * x(1)) * c1 + 2 * (x(3) + x(0) * x(1)) * s1) +
          6 * tm * (x(0) * c2 + x(1) * s2) - 2 * tm * tm * c3;
  return dx;
}

/// Right-hand side of the adjoint system, dPsi/dt = -dH/dx.
template <typename Scalar>
Vector5<Scalar> adjoint_rhs(Scalar t, const Vector5<Scalar>& x, const Vector5<Scalar>& psi, Scalar u) {
  using std::cos;
  using std::sin;
  const Scalar c1 = cos(u), s1 = sin(u);
  const Scalar c2 = cos(2 * u), s2 = sin(2 * u);
  const Scalar tm = t - 1;
  Vector5<Scalar> dpsi;
  dpsi(0) = 4 * c1 * psi(2) - 4 * s1 * psi(3) + (4 * x(0) * c1 + 4 * x(1) * s1 - 6 * tm * c2) * psi(4);
  dpsi(1) = 4 * s1 * psi(2) + 4 * c1 * psi(3) - (4 * x(1) * c1 - 4 * x(0) * s1 + 6 * tm * s2) * psi(4);
  dpsi(2) = 4 * c1 * psi(4);
  dpsi(3) = 4 * s1 * psi(4);
  dpsi(4) = Scalar(0);
  return dpsi;
}

/// The Hamiltonian H(t, x, Psi, u), term by term.
template <typename Scalar>
Scalar hamiltonian(Scalar t, const Vector5<Scalar>& x, const Vector5<Scalar>& psi, Scalar u) {
  using std::cos;
  using std::sin;
  const Scalar c1 = cos(u), s1 = sin(u);
  const Scalar c2 = cos(2 * u), s2 = sin(2 * u);
  const Scalar c3 = cos(3 * u);
  const Scalar tm = t - 1;
  return -2 * c1 * psi(0) + 2 * s1 * psi(1) - (4 * (x(0) * c1 + x(1) * s1) - 2 * tm * c2) * psi(2) +
         (4 * (x(0) * s1 - x(1) * c1) - 2 * tm * s2) * psi(3) -
         (2 * ((2 * x(2) + x(0) * x(0) - x(1) * x(1)) * c1 + 2 * (x(3) + x(0) * x(1)) * s1) -
          6 * tm * (x(0) * c2 + x(1) * s2) + 2 * tm * tm * c3) *
             psi(4);
}

/// H(t, x, Psi, .) as a trigonometric polynomial in u:
///   H(u) = a1 cos u + b1 sin u + a2 cos 2u + b2 sin 2u + a3 cos 3u.
/// Gives the u-derivatives needed by the control solver in closed form.
struct HamiltonianHarmonics {
  double a1 = 0, b1 = 0, a2 = 0, b2 = 0, a3 = 0;

  static HamiltonianHarmonics at(double t, const Vec5& x, const Vec5& psi);

  double value(double u) const;
  double du(double u) const;
  double duu(double u) const;
};

/// H on the base trajectory as a cubic in y = cos u.
struct CubicHamiltonian {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  double operator()(double y) const { return ((a3 * y + a2) * y + a1) * y + a0; }
  double dy(double y) const { return (3 * a3 * y + 2 * a2) * y + a1; }
  /// d^2/du^2 H(cos u) at u = pi, which equals dH/dy at y = -1.
  double huu_at_pi() const { return dy(-1.0); }
};

struct PickCoefficients {
  double p2, p3, p4;
};

/// x0(t) = (2t, 0, 5t^2 - 2t, 0, 14t^3 - 12t^2 + 2t), t in [0, 1].
Vec5 base_state(double t);

/// Closed-form adjoint along u = pi for the problem's transversality data.
Vec5 base_adjoint(const ProblemSpec& spec, double t);

/// Terminal adjoint Psi(T) prescribed by the objective.
Vec5 transversality(const ProblemSpec& spec);

/// Taylor coefficients p2, p3, p4 of the Pick function P_M.
PickCoefficients pick_coefficients(double M);

CubicHamiltonian hamiltonian_cubic(const ProblemSpec& spec, double t);

/// H_uu(t, x0, Psi, pi) from the per-variant closed form.
double huu_at_pi(const ProblemSpec& spec, double t);

}  // namespace loewner
