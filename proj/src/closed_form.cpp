#include "loewner/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

// Denominator 1 - 4 mu / M + 4 mu t, checked positive at 0 and t.
struct Affine {
  double a;   // value at t = 0
  double st;  // value at t

  Affine(double mu, double M, double t) : a(1 - 4 * mu / M), st(1 - 4 * mu / M + 4 * mu * t) {
    if (!(a > 1e-12 && st > 1e-12)) {
      throw InvalidArgument("closed form: 1 - 4mu/M + 4mu t must stay positive (mu=" + std::to_string(mu) + ")");
    }
  }
};

}  // namespace

double fpp_closed(double mu, double M) {
  if (std::isnan(M) || M < 1.0) throw InvalidArgument("fpp_closed: M must be >= 1");
  const double T = 1 - 1 / M;
  const Affine d(mu, M, T);
  if (mu == 0.0) return -2 * T;
  // log((1 + 4mu - 8mu/M) / (1 - 4mu/M)) without cancellation for small mu
  const double L = std::log1p(4 * mu * T / d.a);
  return -(L * L + L) / (2 * mu);
}

ClosedFormResult closed_form_criterion(double mu, double M) {
  ClosedFormResult r;
  r.fpp = fpp_closed(mu, M);
  r.criterion_lhs = -r.fpp;
  r.pick_is_local_max = r.criterion_lhs > 0;
  return r;
}

double up_closed(double mu, double M, double t) {
  const Affine d(mu, M, t);
  return -1 / d.st;
}

double y1_closed(double mu, double M, double t) {
  const Affine d(mu, M, t);
  // (1/2mu)(1/st - 1/a) = -2t / (a st)
  return -2 * t / (d.a * d.st);
}

double y4_closed(double mu, double M, double t) {
  const Affine d(mu, M, t);
  if (mu == 0.0) return 2 * t;
  return std::log1p(4 * mu * t / d.a) / (2 * mu);
}

double sigma32() { return (std::numbers::e - 1) / (4 * std::numbers::e); }

}  // namespace loewner
