#pragma once

// Brute-force reference for the variational pipeline: integrate the full
// coefficient + adjoint system with the control chosen by maximizing the
// Hamiltonian numerically, then difference F(p, q).

#include <optional>

#include <Eigen/Core>

#include "loewner/coeff_ode.hpp"
#include "loewner/integrator.hpp"
#include "loewner/problem.hpp"
#include "loewner/variational.hpp"

namespace loewner {

struct FullState {
  Vec5 x = Vec5::Zero();
  Vec5 psi = Vec5::Zero();
};

using Vec10 = Eigen::Matrix<double, 10, 1>;

inline Vec10 pack(const FullState& s) {
  Vec10 v;
  v << s.x, s.psi;
  return v;
}

inline FullState unpack(const Vec10& v) { return {v.head<5>(), v.tail<5>()}; }

struct ControlSolverOptions {
  int coarse_grid = 256;
  int refine_iters = 60;

  void validate() const;
};

/// Maximizer of H(t, x, Psi, .) over [0, 2 pi): coarse grid, golden-section
/// refinement on the bracketing cell, then Newton on H_u = 0. Among equal
/// grid values the candidate nearest `previous` wins.
double optimal_control(double t, const FullState& s, const ControlSolverOptions& opts = {},
                       std::optional<double> previous = std::nullopt);

/// Control solver with per-trajectory memory of the last control.
class ControlSolver {
 public:
  explicit ControlSolver(ControlSolverOptions opts = {});
  double operator()(double t, const FullState& s);
  std::optional<double> previous() const { return previous_; }

 private:
  ControlSolverOptions opts_;
  std::optional<double> previous_;
};

inline IntegratorOptions default_oracle_integration() { return {Method::RK4, 2000, false}; }

/// Right-hand side of the full 10-dimensional system under the optimal control.
class PontryaginSystem {
 public:
  explicit PontryaginSystem(ControlSolverOptions opts = {});
  Vec10 operator()(double t, const Vec10& y);

 private:
  ControlSolver solver_;
};

/// Initial adjoint of the base trajectory shifted by (0, p, 0, q, 0).
FullState perturbed_initial_state(const ProblemSpec& spec, double p, double q);

/// Terminal state when starting from `start`.
FullState simulate_from(const ProblemSpec& spec, const FullState& start, const IntegratorOptions& integ,
                        const ControlSolverOptions& opts);

/// F(p, q): the objective at T along the trajectory from Psi2(0) = p, Psi4(0) = q.
double simulate(const ProblemSpec& spec, double p, double q,
                const IntegratorOptions& integ = default_oracle_integration(), const ControlSolverOptions& opts = {});

/// Objective weights applied to a terminal coefficient vector.
double objective(const ProblemSpec& spec, const Vec5& x);

/// Central second differences of F with step h.
HessianF fd_hessian(const ProblemSpec& spec, double h, const IntegratorOptions& integ = default_oracle_integration(),
                    const ControlSolverOptions& opts = {});

/// (4 H(h/2) - H(h)) / 3.
HessianF fd_hessian_richardson(const ProblemSpec& spec, double h,
                               const IntegratorOptions& integ = default_oracle_integration(),
                               const ControlSolverOptions& opts = {});

struct LemmaReport {
  double normalized_inner = 0.0;  // Psi(T) . dx / |dx|, 0 if dx vanishes
  double delta_norm = 0.0;        // |x(T; eps e) - x(T; 0)|
};

/// Perturbs Psi(0) by eps * e and measures the terminal displacement.
LemmaReport lemma_checks(const ProblemSpec& spec, const Vec5& e, double eps,
                         const IntegratorOptions& integ = default_oracle_integration(),
                         const ControlSolverOptions& opts = {});

}  // namespace loewner
