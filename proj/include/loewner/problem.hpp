#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace loewner {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Which extremal problem the adjoint transversality data belongs to.
///
///  - LFunctional: Re(a2 + mu a3 + nu a4) over S^M, arbitrary (mu, nu, M).
///  - Sigma24:     Re(a4 + nu a2) over S (M = inf).
///  - Sigma34:     Re(a4 + mu a3) over S (M = inf).
///  - A4Bound:     Re a4 over S^M, M finite.
enum class Variant { LFunctional, Sigma24, Sigma34, A4Bound };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

/// Parameters of one extremal problem. Construct through the factories so the
/// per-variant invariants hold; `M` may be infinite.
struct ProblemSpec {
  Variant variant = Variant::LFunctional;
  double mu = 0.0;
  double nu = 0.0;
  double M = kInf;

  static ProblemSpec linear(double mu, double nu, double M = kInf);
  static ProblemSpec sigma24(double nu);
  static ProblemSpec sigma34(double mu);
  static ProblemSpec a4_bound(double M);

  /// 1/M, exactly zero for M = inf.
  double inv_M() const noexcept { return 1.0 / M; }
  /// Time horizon T = 1 - 1/M.
  double horizon() const noexcept { return 1.0 - inv_M(); }

  /// Weights (w1, w3, w5) of the objective w1 x1(T) + w3 x3(T) + w5 x5(T).
  struct Weights {
    double x1, x3, x5;
  };
  Weights objective_weights() const noexcept;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws InvalidArgument unless `t` lies in [0, T] (a few ulps of slack at T).
/// Returns t clamped into the interval.
double checked_time(const ProblemSpec& spec, double t);

/// Parses a bound written as a number or "inf".
double parse_bound(std::string_view text);

}  // namespace loewner
