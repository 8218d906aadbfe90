#pragma once

// Extremal constants as roots of the second-order conditions
//   g1 = F_pp(0, 0),   g2 = F_pp F_qq - F_pq^2
// along one-parameter families of problems.

#include <string_view>
#include <utility>
#include <vector>

#include "loewner/integrator.hpp"
#include "loewner/problem.hpp"
#include "loewner/variational.hpp"

namespace loewner {

/// One-parameter families and the parameter each is scanned in.
///  - Sigma32: L(mu, 0), M = inf, parameter mu (only g1 applies)
///  - Sigma42: L(0, nu), M = inf, parameter nu
///  - Sigma24: a4 + nu a2, parameter nu
///  - Sigma34: a4 + mu a3, parameter mu
///  - TammiM0: Re a4 over S^M, parameter M
enum class Problem { Sigma32, Sigma42, Sigma24, Sigma34, TammiM0 };

std::string_view to_string(Problem p);
Problem parse_problem(std::string_view name);

ProblemSpec spec_for(Problem problem, double param);

/// Whether the determinant condition takes part (not for the nu = 0 family,
/// where F depends on p alone).
bool uses_determinant(Problem problem);

enum class Attainment { FirstMinor, Determinant };
std::string_view to_string(Attainment a);

struct RootScanConfig {
  std::pair<double, double> scan_interval{};
  int scan_points = 200;
  double bisect_tol = 1e-7;
  IntegratorOptions integ{};

  static RootScanConfig defaults(Problem problem);
  void validate() const;
};

struct SolverResult {
  double value = 0.0;
  Attainment attained_by = Attainment::FirstMinor;
  double root_param = 0.0;
  std::pair<double, double> bracket{};
  std::pair<double, double> g_values_at_bracket{};
  double admissibility_margin = 0.0;
  double step_halving_delta = 0.0;  // |g(root; steps) - g(root; 2 steps)|

  friend bool operator==(const SolverResult&, const SolverResult&) = default;
};

struct Minors {
  double g1 = 0.0;
  double g2 = 0.0;
  double get(Attainment which) const { return which == Attainment::FirstMinor ? g1 : g2; }
};

Minors minors(Problem problem, double param, const IntegratorOptions& integ = {});
double g1(Problem problem, double param, const IntegratorOptions& integ = {});
double g2(Problem problem, double param, const IntegratorOptions& integ = {});

struct ScanRow {
  double param = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double admissibility_margin = 0.0;
};

/// g1, g2 and the admissibility margin on scan_points + 1 equally spaced
/// parameters (parallel over the grid, deterministic order).
std::vector<ScanRow> scan_table(Problem problem, const RootScanConfig& cfg);

/// Root located on one of the two conditions.
struct Root {
  double param;
  Attainment equation;
  std::pair<double, double> bracket;
  std::pair<double, double> g_at_bracket;
};

/// Every bisected sign change of g1 and (when used) g2 inside the interval.
std::vector<Root> find_roots(Problem problem, const RootScanConfig& cfg);

/// sigma problems: minus the negative root closest to zero;
/// TammiM0: the largest root.
SolverResult solve(Problem problem, const RootScanConfig& cfg);
inline SolverResult solve(Problem problem) { return solve(problem, RootScanConfig::defaults(problem)); }

}  // namespace loewner
