#include "loewner/coeff_ode.hpp"

#include <cmath>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

HamiltonianHarmonics HamiltonianHarmonics::at(double t, const Vec5& x, const Vec5& psi) {
  const double tm = t - 1.0;
  HamiltonianHarmonics h;
  h.a1 = -2 * psi(0) - 4 * x(0) * psi(2) - 4 * x(1) * psi(3) - 2 * (2 * x(2) + x(0) * x(0) - x(1) * x(1)) * psi(4);
  h.b1 = 2 * psi(1) - 4 * x(1) * psi(2) + 4 * x(0) * psi(3) - 4 * (x(3) + x(0) * x(1)) * psi(4);
  h.a2 = 2 * tm * psi(2) + 6 * tm * x(0) * psi(4);
  h.b2 = -2 * tm * psi(3) + 6 * tm * x(1) * psi(4);
  h.a3 = -2 * tm * tm * psi(4);
  return h;
}

double HamiltonianHarmonics::value(double u) const {
  return a1 * std::cos(u) + b1 * std::sin(u) + a2 * std::cos(2 * u) + b2 * std::sin(2 * u) + a3 * std::cos(3 * u);
}

double HamiltonianHarmonics::du(double u) const {
  return -a1 * std::sin(u) + b1 * std::cos(u) - 2 * a2 * std::sin(2 * u) + 2 * b2 * std::cos(2 * u) -
         3 * a3 * std::sin(3 * u);
}

double HamiltonianHarmonics::duu(double u) const {
  return -a1 * std::cos(u) - b1 * std::sin(u) - 4 * a2 * std::cos(2 * u) - 4 * b2 * std::sin(2 * u) -
         9 * a3 * std::cos(3 * u);
}

Vec5 base_state(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("base_state: t=" + std::to_string(t) + " outside [0, 1]");
  Vec5 x;
  x << 2 * t, 0.0, (5 * t - 2) * t, 0.0, ((14 * t - 12) * t + 2) * t;
  return x;
}

Vec5 base_adjoint(const ProblemSpec& spec, double t) {
  t = checked_time(spec, t);
  const double m = spec.inv_M();
  const double mu = spec.mu, nu = spec.nu;
  Vec5 psi = Vec5::Zero();
  switch (spec.variant) {
    case Variant::LFunctional: {
      const double s = t - 1 + m;
      psi(0) = nu * s * s + (14 * nu * m - 8 * nu - 4 * mu) * s + 1;
      psi(2) = -4 * nu * s + mu;
      psi(4) = nu;
      break;
    }
    case Variant::Sigma24:
      psi(0) = t * t - 10 * t + 9 + nu;
      psi(2) = -4 * (t - 1);
      psi(4) = 1;
      break;
    case Variant::Sigma34:
      psi(0) = t * t - (10 + 4 * mu) * t + 9 + 4 * mu;
      psi(2) = -4 * (t - 1) + mu;
      psi(4) = 1;
      break;
    case Variant::A4Bound:
      psi(0) = t * t - (10 - 16 * m) * t + 9 - 24 * m + 15 * m * m;
      psi(2) = -4 * (t - 1 + m);
      psi(4) = 1;
      break;
  }
  return psi;
}

Vec5 transversality(const ProblemSpec& spec) {
  Vec5 psi = Vec5::Zero();
  switch (spec.variant) {
    case Variant::LFunctional:
      psi << 1, 0, spec.mu, 0, spec.nu;
      break;
    case Variant::Sigma24:
      psi << spec.nu, 0, 0, 0, 1;
      break;
    case Variant::Sigma34:
      psi << 0, 0, spec.mu, 0, 1;
      break;
    case Variant::A4Bound:
      psi << 0, 0, 0, 0, 1;
      break;
  }
  return psi;
}

PickCoefficients pick_coefficients(double M) {
  if (std::isnan(M) || M < 1.0) throw InvalidArgument("pick_coefficients: M must be >= 1");
  const double T = 1.0 - 1.0 / M;
  const Vec5 x = base_state(T);
  return {2.0 * (1.0 - 1.0 / M), x(2), x(4)};
}

CubicHamiltonian hamiltonian_cubic(const ProblemSpec& spec, double t) {
  t = checked_time(spec, t);
  const Vec5 x = base_state(t);
  const Vec5 psi = base_adjoint(spec, t);
  const double tm = t - 1.0;
  CubicHamiltonian h;
  h.a3 = -8 * tm * tm * psi(4);
  h.a2 = 4 * tm * psi(2) + 12 * tm * x(0) * psi(4);
  h.a1 = -2 * psi(0) - 4 * x(0) * psi(2) - (2 * (2 * x(2) + x(0) * x(0)) - 6 * tm * tm) * psi(4);
  h.a0 = -2 * tm * psi(2) - 6 * tm * x(0) * psi(4);
  return h;
}

double huu_at_pi(const ProblemSpec& spec, double t) {
  t = checked_time(spec, t);
  const double m = spec.inv_M();
  const double mu = spec.mu, nu = spec.nu;
  switch (spec.variant) {
    case Variant::LFunctional:
      return -2 * (16 * nu * t * t - 4 * (2 * nu + 4 * nu * m - mu) * t + 2 * nu + 1 - 4 * (2 * nu + mu) * m +
                   15 * nu * m * m);
    case Variant::Sigma24:
      return -2 * (16 * t * t - 8 * t + nu + 2);
    case Variant::Sigma34:
      return -4 * (8 * t * t - (4 - 2 * mu) * t + 1);
    case Variant::A4Bound:
      return -2 * (16 * t * t - (8 + 16 * m) * t + 2 - 8 * m + 15 * m * m);
  }
  return 0.0;
}

}  // namespace loewner
