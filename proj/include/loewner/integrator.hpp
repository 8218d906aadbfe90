#pragma once

// Fixed-step explicit integrators: classical RK4 and a 4th-order
// Adams-Bashforth-Moulton predictor-corrector (PECE) started with RK4.
//
// States are Eigen column vectors (fixed or dynamic size). The right-hand
// side is any callable `State rhs(double t, const State& y)`.

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

enum class Method { RK4, ABM4 };

inline std::string_view to_string(Method m) { return m == Method::RK4 ? "rk4" : "abm4"; }

inline Method parse_method(std::string_view name) {
  if (name == "rk4" || name == "RK4") return Method::RK4;
  if (name == "abm4" || name == "ABM4") return Method::ABM4;
  throw InvalidArgument("unknown integration method '" + std::string(name) + "'");
}

struct IntegratorOptions {
  Method method = Method::RK4;
  int steps = 20000;
  bool record_trajectory = false;

  void validate() const {
    const int min_steps = method == Method::ABM4 ? 4 : 1;
    if (steps < min_steps) {
      throw InvalidArgument("integrator needs at least " + std::to_string(min_steps) + " steps for " +
                            std::string(to_string(method)));
    }
  }
};

template <typename State>
struct IntegrationResult {
  State y;
  std::vector<double> times;      // filled when record_trajectory is set
  std::vector<State> trajectory;  // state at each entry of `times`
};

namespace detail {

template <typename State, typename Rhs>
State rk4_step(Rhs& rhs, double t, const State& y, double h) {
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + h / 2, State(y + (h / 2) * k1));
  const State k3 = rhs(t + h / 2, State(y + (h / 2) * k2));
  const State k4 = rhs(t + h, State(y + h * k3));
  return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

[[noreturn]] inline void rethrow_at(const NumericalError& e, double t) {
  throw NumericalError(std::string(e.what()) + " (integrating step from t=" + std::to_string(t) + ")");
}

}  // namespace detail

/// Integrates y' = rhs(t, y) from t0 to t1 with `opts.steps` equal steps.
/// Deterministic: the same inputs give bitwise-identical results.
template <typename State, typename Rhs>
IntegrationResult<State> integrate(Rhs&& rhs, const State& y0, double t0, double t1,
                                   const IntegratorOptions& opts) {
  opts.validate();
  if (!(t1 >= t0)) throw InvalidArgument("integrate: need t1 >= t0");
  const int n = opts.steps;
  const double h = (t1 - t0) / n;
  auto time_at = [&](int i) { return i == n ? t1 : t0 + i * h; };

  IntegrationResult<State> out;
  State y = y0;
  auto record = [&](int i) {
    if (opts.record_trajectory) {
      out.times.push_back(time_at(i));
      out.trajectory.push_back(y);
    }
  };
  if (opts.record_trajectory) {
    out.times.reserve(n + 1);
    out.trajectory.reserve(n + 1);
  }
  record(0);

  int i = 0;
  try {
    if (opts.method == Method::RK4) {
      for (; i < n; ++i) {
        y = detail::rk4_step(rhs, time_at(i), y, h);
        record(i + 1);
      }
    } else {
      // f[0] is the newest derivative, f[3] the oldest.
      std::array<State, 4> f;
      f[0] = rhs(time_at(0), y);
      for (; i < 3; ++i) {
        y = detail::rk4_step(rhs, time_at(i), y, h);
        record(i + 1);
        for (int k = 3; k > 0; --k) f[k] = f[k - 1];
        f[0] = rhs(time_at(i + 1), y);
      }
      for (; i < n; ++i) {
        const double t_next = time_at(i + 1);
        const State predicted = y + (h / 24) * (55 * f[0] - 59 * f[1] + 37 * f[2] - 9 * f[3]);
        const State f_pred = rhs(t_next, predicted);
        y = y + (h / 24) * (9 * f_pred + 19 * f[0] - 5 * f[1] + f[2]);
        record(i + 1);
        for (int k = 3; k > 0; --k) f[k] = f[k - 1];
        f[0] = rhs(t_next, y);
      }
    }
  } catch (const DenominatorVanishing&) {
    throw;
  } catch (const NumericalError& e) {
    detail::rethrow_at(e, time_at(i));
  }
  out.y = y;
  return out;
}

/// Empirical convergence order from runs with steps, 2 steps and 4 steps:
/// log2(|y_n - y_2n| / |y_2n - y_4n|).
template <typename State, typename Rhs>
double order_estimate(Rhs&& rhs, const State& y0, double t0, double t1, int steps, Method method = Method::RK4) {
  IntegratorOptions opts{method, steps, false};
  const State a = integrate(rhs, y0, t0, t1, opts).y;
  opts.steps = 2 * steps;
  const State b = integrate(rhs, y0, t0, t1, opts).y;
  opts.steps = 4 * steps;
  const State c = integrate(rhs, y0, t0, t1, opts).y;
  return std::log2((a - b).norm() / (b - c).norm());
}

}  // namespace loewner
