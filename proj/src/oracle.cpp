#include "loewner/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double wrap(double u) {
  u = std::fmod(u, kTwoPi);
  return u < 0 ? u + kTwoPi : u;
}

// Circular distance on [0, 2 pi).
double angular_distance(double a, double b) {
  const double d = std::abs(wrap(a) - wrap(b));
  return std::min(d, kTwoPi - d);
}

double golden_max(const HamiltonianHarmonics& h, double lo, double hi, int iters) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = h.value(x1), f2 = h.value(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = h.value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = h.value(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void ControlSolverOptions::validate() const {
  if (coarse_grid < 64) throw InvalidArgument("control solver needs coarse_grid >= 64");
  if (refine_iters < 0) throw InvalidArgument("control solver needs refine_iters >= 0");
}

double optimal_control(double t, const FullState& s, const ControlSolverOptions& opts,
                       std::optional<double> previous) {
  opts.validate();
  const auto h = HamiltonianHarmonics::at(t, s.x, s.psi);
  const int n = opts.coarse_grid;
  const double du = kTwoPi / n;

  std::vector<double> values(n);
  for (int k = 0; k < n; ++k) values[k] = h.value(k * du);

  const double prev = previous.value_or(std::numbers::pi);
  int best = 0;
  for (int k = 1; k < n; ++k) {
    if (values[k] > values[best] ||
        (values[k] == values[best] && angular_distance(k * du, prev) < angular_distance(best * du, prev))) {
      best = k;
    }
  }
  for (int k = 0; k < n; ++k) {
    const int gap = std::min(std::abs(k - best), n - std::abs(k - best));
    if (gap <= 1) continue;
    const bool peak = values[k] >= values[(k + n - 1) % n] && values[k] >= values[(k + 1) % n];
    if (peak && values[best] - values[k] < 1e-13) {
      throw NumericalError("ambiguous maximizer of the Hamiltonian at t=" + std::to_string(t));
    }
  }

  const double lo = (best - 1) * du, hi = (best + 1) * du;
  double u = golden_max(h, lo, hi, opts.refine_iters);
  for (int i = 0; i < 4; ++i) {
    const double curvature = h.duu(u);
    if (!(curvature < 0)) break;
    const double next = u - h.du(u) / curvature;
    if (next < lo || next > hi) break;
    if (next == u) break;
    u = next;
  }
  return wrap(u);
}

ControlSolver::ControlSolver(ControlSolverOptions opts) : opts_(opts) { opts_.validate(); }

double ControlSolver::operator()(double t, const FullState& s) {
  const double u = optimal_control(t, s, opts_, previous_);
  if (angular_distance(u, std::numbers::pi) > std::numbers::pi / 2 ||
      (previous_ && angular_distance(u, *previous_) > std::numbers::pi / 2)) {
    throw NumericalError("control left the base neighborhood at t=" + std::to_string(t));
  }
  previous_ = u;
  return u;
}

PontryaginSystem::PontryaginSystem(ControlSolverOptions opts) : solver_(opts) {}

Vec10 PontryaginSystem::operator()(double t, const Vec10& y) {
  const FullState s = unpack(y);
  const double u = solver_(t, s);
  Vec10 dy;
  dy << state_rhs(t, s.x, u), adjoint_rhs(t, s.x, s.psi, u);
  return dy;
}

FullState perturbed_initial_state(const ProblemSpec& spec, double p, double q) {
  FullState s;
  s.psi = base_adjoint(spec, 0.0);
  s.psi(1) += p;
  s.psi(3) += q;
  return s;
}

FullState simulate_from(const ProblemSpec& spec, const FullState& start, const IntegratorOptions& integ,
                        const ControlSolverOptions& opts) {
  IntegratorOptions o = integ;
  o.record_trajectory = false;
  PontryaginSystem system(opts);
  return unpack(integrate(system, pack(start), 0.0, spec.horizon(), o).y);
}

double objective(const ProblemSpec& spec, const Vec5& x) {
  const auto w = spec.objective_weights();
  return w.x1 * x(0) + w.x3 * x(2) + w.x5 * x(4);
}

double simulate(const ProblemSpec& spec, double p, double q, const IntegratorOptions& integ,
                const ControlSolverOptions& opts) {
  return objective(spec, simulate_from(spec, perturbed_initial_state(spec, p, q), integ, opts).x);
}

HessianF fd_hessian(const ProblemSpec& spec, double h, const IntegratorOptions& integ,
                    const ControlSolverOptions& opts) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw InvalidArgument("fd_hessian: h must lie in [1e-4, 1e-2]");
  auto F = [&](double p, double q) { return simulate(spec, p, q, integ, opts); };
  const double f0 = F(0, 0);
  const double h2 = h * h;
  HessianF H;
  H.fpp = (F(h, 0) - 2 * f0 + F(-h, 0)) / h2;
  H.fqq = (F(0, h) - 2 * f0 + F(0, -h)) / h2;
  H.fpq = (F(h, h) - F(h, -h) - F(-h, h) + F(-h, -h)) / (4 * h2);
  return H;
}

HessianF fd_hessian_richardson(const ProblemSpec& spec, double h, const IntegratorOptions& integ,
                               const ControlSolverOptions& opts) {
  const HessianF coarse = fd_hessian(spec, h, integ, opts);
  const HessianF fine = fd_hessian(spec, h / 2, integ, opts);
  return {(4 * fine.fpp - coarse.fpp) / 3, (4 * fine.fqq - coarse.fqq) / 3, (4 * fine.fpq - coarse.fpq) / 3};
}

LemmaReport lemma_checks(const ProblemSpec& spec, const Vec5& e, double eps, const IntegratorOptions& integ,
                         const ControlSolverOptions& opts) {
  if (std::abs(e.norm() - 1.0) > 1e-12) throw InvalidArgument("lemma_checks: direction must be a unit vector");
  if (!(eps > 0)) throw InvalidArgument("lemma_checks: eps must be positive");
  FullState start = perturbed_initial_state(spec, 0, 0);
  const Vec5 x0 = simulate_from(spec, start, integ, opts).x;
  start.psi += eps * e;
  const Vec5 x1 = simulate_from(spec, start, integ, opts).x;
  LemmaReport r;
  r.delta_norm = (x1 - x0).norm();
  const Vec5 dx = (x1 - x0) / eps;
  if (dx.norm() > 0) r.normalized_inner = transversality(spec).dot(dx) / dx.norm();
  return r;
}

}  // namespace loewner
