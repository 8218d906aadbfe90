#pragma once

#include <utility>

#include "loewner/problem.hpp"

namespace loewner {

/// Pointwise check, on a uniform t-grid over [0, T], that the base
/// Hamiltonian (a cubic in y = cos u) has its strict maximum over [-1, 1]
/// at y = -1 and that H_uu(t, pi) stays away from zero.
struct AdmissibilityReport {
  bool admissible = false;
  bool indeterminate = false;  // some margin within kTieTol of zero
  double min_gap = 0.0;        // min over t of H(-1) - max over the other candidates
  double min_abs_huu = 0.0;
  double worst_t = 0.0;  // where min_gap is attained
  int grid_n = 0;

  friend bool operator==(const AdmissibilityReport&, const AdmissibilityReport&) = default;
};

inline constexpr double kTieTol = 1e-12;
inline constexpr int kDefaultAdmissibilityGrid = 2048;

AdmissibilityReport check_admissible(const ProblemSpec& spec, int grid_n = kDefaultAdmissibilityGrid);

/// Throws AdmissibilityError unless the problem is admissible and determinate.
void require_admissible(const ProblemSpec& spec, int grid_n = kDefaultAdmissibilityGrid);

enum class Axis { Mu, Nu, M };

/// Copy of `spec` with the parameter on `axis` replaced, validated through
/// the variant's factory.
ProblemSpec with_parameter(const ProblemSpec& spec, Axis axis, double value);

/// Bisects the admissible / inadmissible transition along `axis` inside
/// `interval`; the endpoints must disagree in admissibility.
double boundary_scan(const ProblemSpec& base, Axis axis, std::pair<double, double> interval, double tol,
                     int grid_n = kDefaultAdmissibilityGrid);

}  // namespace loewner
