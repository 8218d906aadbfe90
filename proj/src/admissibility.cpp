#include "loewner/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "loewner/coeff_ode.hpp"
#include "loewner/errors.hpp"

namespace loewner {

namespace {

// Largest value of the cubic over {1} and its critical points in (-1, 1].
double best_competitor(const CubicHamiltonian& h) {
  double best = h(1.0);
  auto consider = [&](double y) {
    if (y > -1.0 && y <= 1.0) best = std::max(best, h(y));
  };
  // h'(y) = A y^2 + B y + C
  const double A = 3 * h.a3, B = 2 * h.a2, C = h.a1;
  if (A == 0.0) {
    if (B != 0.0) consider(-C / B);
    return best;
  }
  const double disc = B * B - 4 * A * C;
  if (disc < 0.0) return best;
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  consider(q / A);
  if (q != 0.0) consider(C / q);
  return best;
}

}  // namespace

AdmissibilityReport check_admissible(const ProblemSpec& spec, int grid_n) {
  if (grid_n < 2) throw InvalidArgument("check_admissible: grid_n must be >= 2");
  const double T = spec.horizon();
  AdmissibilityReport r;
  r.grid_n = grid_n;
  r.min_gap = std::numeric_limits<double>::infinity();
  r.min_abs_huu = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid_n; ++i) {
    const double t = i == grid_n ? T : T * i / grid_n;
    const CubicHamiltonian h = hamiltonian_cubic(spec, t);
    const double gap = h(-1.0) - best_competitor(h);
    if (gap < r.min_gap) {
      r.min_gap = gap;
      r.worst_t = t;
    }
    r.min_abs_huu = std::min(r.min_abs_huu, std::abs(huu_at_pi(spec, t)));
  }
  r.admissible = r.min_gap > 0.0 && r.min_abs_huu > 0.0;
  r.indeterminate = std::abs(r.min_gap) <= kTieTol || r.min_abs_huu <= kTieTol;
  return r;
}

void require_admissible(const ProblemSpec& spec, int grid_n) {
  const auto r = check_admissible(spec, grid_n);
  if (r.indeterminate) {
    throw AdmissibilityError("admissibility indeterminate (margin " + std::to_string(r.min_gap) + " at t=" +
                             std::to_string(r.worst_t) + ")");
  }
  if (!r.admissible) {
    throw AdmissibilityError("parameters outside the admissible domain (margin " + std::to_string(r.min_gap) +
                             " at t=" + std::to_string(r.worst_t) + ")");
  }
}

ProblemSpec with_parameter(const ProblemSpec& spec, Axis axis, double value) {
  double mu = spec.mu, nu = spec.nu, M = spec.M;
  switch (axis) {
    case Axis::Mu:
      mu = value;
      break;
    case Axis::Nu:
      nu = value;
      break;
    case Axis::M:
      M = value;
      break;
  }
  switch (spec.variant) {
    case Variant::LFunctional:
      return ProblemSpec::linear(mu, nu, M);
    case Variant::Sigma24:
      if (axis != Axis::Nu) throw InvalidArgument("Sigma24 is parameterized by nu only");
      return ProblemSpec::sigma24(nu);
    case Variant::Sigma34:
      if (axis != Axis::Mu) throw InvalidArgument("Sigma34 is parameterized by mu only");
      return ProblemSpec::sigma34(mu);
    case Variant::A4Bound:
      if (axis != Axis::M) throw InvalidArgument("A4 bound problem is parameterized by M only");
      return ProblemSpec::a4_bound(M);
  }
  return spec;
}

double boundary_scan(const ProblemSpec& base, Axis axis, std::pair<double, double> interval, double tol,
                     int grid_n) {
  if (!(tol > 0.0)) throw InvalidArgument("boundary_scan: tol must be positive");
  auto [lo, hi] = interval;
  auto admissible = [&](double x) { return check_admissible(with_parameter(base, axis, x), grid_n).admissible; };
  const bool at_lo = admissible(lo);
  if (at_lo == admissible(hi)) {
    throw InvalidArgument("boundary_scan: interval endpoints agree in admissibility");
  }
  while (std::abs(hi - lo) > tol) {
    const double mid = 0.5 * (lo + hi);
    (admissible(mid) == at_lo ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace loewner
