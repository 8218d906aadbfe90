#pragma once

// Explicit integration of the p-variation when nu = 0 (no a4 in the
// functional). Used both as a result in its own right (sigma_32) and as a
// reference for the ODE pipeline.

namespace loewner {

struct ClosedFormResult {
  double fpp = 0.0;
  double criterion_lhs = 0.0;  // > 0 iff the Pick function is a strict local max
  bool pick_is_local_max = false;
};

/// F''(0) = y1(T) + mu y2(T) for nu = 0, bound M (may be infinite).
double fpp_closed(double mu, double M);

ClosedFormResult closed_form_criterion(double mu, double M);

/// u_p(t) = -1 / (4 mu t + 1 - 4 mu / M).
double up_closed(double mu, double M, double t);
double y1_closed(double mu, double M, double t);
double y4_closed(double mu, double M, double t);

/// (e - 1) / (4e).
double sigma32();

}  // namespace loewner
