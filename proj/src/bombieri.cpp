#include "loewner/bombieri.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loewner/admissibility.hpp"
#include "loewner/errors.hpp"
#include "loewner/parallel.hpp"

namespace loewner {

namespace {

constexpr double kStepHalvingTol = 1e-10;
constexpr double kBoundaryMarginTol = 1e-9;

bool is_sigma(Problem p) { return p != Problem::TammiM0; }

bool opposite(double a, double b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

double bisect(Problem problem, Attainment eq, double lo, double hi, double g_lo, double tol,
              const IntegratorOptions& integ) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = minors(problem, mid, integ).get(eq);
    if (g_mid == 0.0) return mid;
    if (opposite(g_lo, g_mid)) {
      hi = mid;
    } else {
      lo = mid;
      g_lo = g_mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::Sigma32:
      return "sigma32";
    case Problem::Sigma42:
      return "sigma42";
    case Problem::Sigma24:
      return "sigma24";
    case Problem::Sigma34:
      return "sigma34";
    case Problem::TammiM0:
      return "m0";
  }
  return "?";
}

Problem parse_problem(std::string_view name) {
  for (auto p : {Problem::Sigma32, Problem::Sigma42, Problem::Sigma24, Problem::Sigma34, Problem::TammiM0}) {
    if (name == to_string(p)) return p;
  }
  throw InvalidArgument("unknown problem '" + std::string(name) + "'");
}

std::string_view to_string(Attainment a) { return a == Attainment::FirstMinor ? "first_minor" : "determinant"; }

ProblemSpec spec_for(Problem problem, double param) {
  switch (problem) {
    case Problem::Sigma32:
      return ProblemSpec::linear(param, 0.0);
    case Problem::Sigma42:
      return ProblemSpec::linear(0.0, param);
    case Problem::Sigma24:
      return ProblemSpec::sigma24(param);
    case Problem::Sigma34:
      return ProblemSpec::sigma34(param);
    case Problem::TammiM0:
      return ProblemSpec::a4_bound(param);
  }
  throw InvalidArgument("unknown problem");
}

bool uses_determinant(Problem problem) { return problem != Problem::Sigma32; }

RootScanConfig RootScanConfig::defaults(Problem problem) {
  RootScanConfig cfg;
  switch (problem) {
    case Problem::Sigma32:
      cfg.scan_interval = {-0.249, -0.001};
      break;
    case Problem::Sigma42:
      cfg.scan_interval = {-0.099, -0.001};
      break;
    case Problem::Sigma24:
      cfg.scan_interval = {-0.99, -0.01};
      break;
    case Problem::Sigma34:
      cfg.scan_interval = {-0.82, -0.01};
      break;
    case Problem::TammiM0:
      cfg.scan_interval = {11.25, 300.0};
      break;
  }
  return cfg;
}

void RootScanConfig::validate() const {
  if (!(scan_interval.first < scan_interval.second)) throw InvalidArgument("scan interval must be increasing");
  if (scan_points < 1) throw InvalidArgument("scan_points must be >= 1");
  if (!(bisect_tol > 0)) throw InvalidArgument("bisect_tol must be positive");
  integ.validate();
}

Minors minors(Problem problem, double param, const IntegratorOptions& integ) {
  const HessianF h = hessian_of_F(spec_for(problem, param), integ);
  return {h.fpp, h.det()};
}

double g1(Problem problem, double param, const IntegratorOptions& integ) { return minors(problem, param, integ).g1; }
double g2(Problem problem, double param, const IntegratorOptions& integ) { return minors(problem, param, integ).g2; }

std::vector<ScanRow> scan_table(Problem problem, const RootScanConfig& cfg) {
  cfg.validate();
  const auto [lo, hi] = cfg.scan_interval;
  const int n = cfg.scan_points;
  std::vector<ScanRow> rows(n + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].param = i == n ? hi : lo + (hi - lo) * static_cast<double>(i) / n;
    const auto report = check_admissible(spec_for(problem, rows[i].param));
    if (!report.admissible || report.indeterminate) {
      throw AdmissibilityError("scan leaves the admissible domain at " + std::string(to_string(problem)) +
                               " parameter " + std::to_string(rows[i].param));
    }
    rows[i].admissibility_margin = report.min_gap;
  }
  parallel_for(rows.size(), [&](std::size_t i) {
    const Minors g = minors(problem, rows[i].param, cfg.integ);
    rows[i].g1 = g.g1;
    rows[i].g2 = g.g2;
  });
  return rows;
}

std::vector<Root> find_roots(Problem problem, const RootScanConfig& cfg) {
  const auto rows = scan_table(problem, cfg);
  std::vector<Attainment> equations{Attainment::FirstMinor};
  if (uses_determinant(problem)) equations.push_back(Attainment::Determinant);

  struct Bracket {
    std::size_t i;
    Attainment eq;
  };
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    for (auto eq : equations) {
      const double a = eq == Attainment::FirstMinor ? rows[i].g1 : rows[i].g2;
      const double b = eq == Attainment::FirstMinor ? rows[i + 1].g1 : rows[i + 1].g2;
      if (opposite(a, b) || (b == 0.0 && a != 0.0)) brackets.push_back({i, eq});
    }
  }

  std::vector<Root> roots(brackets.size());
  parallel_for(brackets.size(), [&](std::size_t k) {
    const auto& [i, eq] = brackets[k];
    const ScanRow& a = rows[i];
    const ScanRow& b = rows[i + 1];
    const double ga = eq == Attainment::FirstMinor ? a.g1 : a.g2;
    const double gb = eq == Attainment::FirstMinor ? b.g1 : b.g2;
    const double x = gb == 0.0 ? b.param : bisect(problem, eq, a.param, b.param, ga, cfg.bisect_tol, cfg.integ);
    roots[k] = {x, eq, {a.param, b.param}, {ga, gb}};
  });
  return roots;
}

SolverResult solve(Problem problem, const RootScanConfig& cfg) {
  const auto roots = find_roots(problem, cfg);
  const Root* chosen = nullptr;
  for (const auto& r : roots) {
    if (is_sigma(problem) && !(r.param < 0)) continue;
    if (!chosen || r.param > chosen->param) chosen = &r;
  }
  if (!chosen) {
    throw NumericalError("no sign change found for " + std::string(to_string(problem)) + " in [" +
                         std::to_string(cfg.scan_interval.first) + ", " + std::to_string(cfg.scan_interval.second) +
                         "]");
  }

  SolverResult out;
  out.root_param = chosen->param;
  out.value = is_sigma(problem) ? -chosen->param : chosen->param;
  out.attained_by = chosen->equation;
  out.bracket = chosen->bracket;
  out.g_values_at_bracket = chosen->g_at_bracket;

  const auto lo = check_admissible(spec_for(problem, chosen->bracket.first));
  const auto hi = check_admissible(spec_for(problem, chosen->bracket.second));
  out.admissibility_margin = std::min(lo.min_gap, hi.min_gap);
  if (!lo.admissible || !hi.admissible || lo.indeterminate || hi.indeterminate ||
      out.admissibility_margin < kBoundaryMarginTol) {
    throw AdmissibilityError("root bracket touches the domain boundary (margin " +
                             std::to_string(out.admissibility_margin) + ")");
  }

  IntegratorOptions doubled = cfg.integ;
  doubled.steps *= 2;
  const ProblemSpec at_root = spec_for(problem, out.root_param);
  const HessianF coarse = hessian_of_F(at_root, cfg.integ);
  const HessianF fine = hessian_of_F(at_root, doubled);
  const bool det = out.attained_by == Attainment::Determinant;
  out.step_halving_delta = det ? std::abs(coarse.det() - fine.det()) : std::abs(coarse.fpp - fine.fpp);
  // Roundoff in the determinant scales with its two products, not with its (vanishing) value.
  const double scale = det ? std::max({1.0, std::abs(coarse.fpp * coarse.fqq), coarse.fpq * coarse.fpq})
                           : std::max(1.0, std::abs(coarse.fpp));
  if (out.step_halving_delta > kStepHalvingTol * scale) {
    throw NumericalError("step halving changes the condition by " + std::to_string(out.step_halving_delta) +
                         " at the root; increase --steps");
  }
  return out;
}

}  // namespace loewner
