#include "loewner/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "loewner/admissibility.hpp"
#include "loewner/bombieri.hpp"
#include "loewner/closed_form.hpp"
#include "loewner/errors.hpp"
#include "loewner/oracle.hpp"
#include "loewner/run_record.hpp"
#include "loewner/variational.hpp"

namespace loewner::cli {

namespace {

constexpr double kOracleTolerance = 1e-5;

struct IntegFlags {
  int steps = IntegratorOptions{}.steps;
  std::string method = "rk4";

  IntegratorOptions options() const { return {parse_method(method), steps, false}; }
};

struct SpecFlags {
  std::string variant = "L";
  double mu = 0.0;
  double nu = 0.0;
  std::string M = "inf";

  ProblemSpec spec() const {
    const double bound = parse_bound(M);
    switch (parse_variant(variant)) {
      case Variant::LFunctional:
        return ProblemSpec::linear(mu, nu, bound);
      case Variant::Sigma24:
        return ProblemSpec::sigma24(nu);
      case Variant::Sigma34:
        return ProblemSpec::sigma34(mu);
      case Variant::A4Bound:
        return ProblemSpec::a4_bound(bound);
    }
    throw InvalidArgument("unknown variant");
  }
};

struct ScanFlags {
  int grid = 200;
  double tol = 1e-7;
  std::optional<double> from;
  std::optional<double> to;

  RootScanConfig config(Problem problem, const IntegFlags& integ) const {
    RootScanConfig cfg = RootScanConfig::defaults(problem);
    if (from) cfg.scan_interval.first = *from;
    if (to) cfg.scan_interval.second = *to;
    cfg.scan_points = grid;
    cfg.bisect_tol = tol;
    cfg.integ = integ.options();
    cfg.validate();
    return cfg;
  }
};

void add_integ(CLI::App* sub, IntegFlags& f, const char* steps_help = "integrator steps over [0, T]") {
  sub->add_option("--steps", f.steps, steps_help)->capture_default_str();
  sub->add_option("--method", f.method, "integration method")
      ->check(CLI::IsMember({"rk4", "abm4"}))
      ->capture_default_str();
}

void add_spec(CLI::App* sub, SpecFlags& f) {
  sub->add_option("--variant", f.variant, "problem variant")
      ->check(CLI::IsMember({"L", "S24", "S34", "A4"}))
      ->capture_default_str();
  sub->add_option("--mu", f.mu, "coefficient mu")->capture_default_str();
  sub->add_option("--nu", f.nu, "coefficient nu")->capture_default_str();
  sub->add_option("--M", f.M, "bound M (number >= 1 or inf)")->capture_default_str();
}

void add_scan(CLI::App* sub, ScanFlags& f) {
  sub->add_option("--grid", f.grid, "scan points")->capture_default_str();
  sub->add_option("--tol", f.tol, "bisection tolerance")->capture_default_str();
  sub->add_option("--from", f.from, "scan interval start (default per problem)");
  sub->add_option("--to", f.to, "scan interval end (default per problem)");
}

void settings_from(RunRecord& rec, const RootScanConfig& cfg) {
  rec.settings["tol"] = cfg.bisect_tol;
  rec.settings["grid"] = cfg.scan_points;
  rec.settings["from"] = cfg.scan_interval.first;
  rec.settings["to"] = cfg.scan_interval.second;
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "param,g1,g2,admissibility_margin\n";
  for (const auto& r : rows) {
    os << format_number(r.param) << ',' << format_number(r.g1) << ',' << format_number(r.g2) << ','
       << format_number(r.admissibility_margin) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Second-variation solver for coefficient problems of univalent functions", "loewner"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "print the result document as JSON");

  IntegFlags integ;
  SpecFlags spec_flags;
  ScanFlags scan_flags;
  int grid_n = kDefaultAdmissibilityGrid;
  double fd_step = 1e-3;
  int var_steps = IntegratorOptions{}.steps;
  int coarse_grid = ControlSolverOptions{}.coarse_grid;
  std::string problem_name = "sigma42";

  auto* s32 = app.add_subcommand("sigma32", "closed-form sigma_32 plus the ODE-pipeline root");
  add_integ(s32, integ);
  add_scan(s32, scan_flags);

  std::vector<std::pair<CLI::App*, Problem>> solvers;
  for (auto [name, problem] : {std::pair{"sigma42", Problem::Sigma42}, std::pair{"sigma24", Problem::Sigma24},
                               std::pair{"sigma34", Problem::Sigma34}, std::pair{"m0", Problem::TammiM0}}) {
    auto* sub = app.add_subcommand(name, "locate " + std::string(name) + " from the second-order conditions");
    add_integ(sub, integ);
    add_scan(sub, scan_flags);
    solvers.emplace_back(sub, problem);
  }

  auto* hess = app.add_subcommand("hessian", "F_pp, F_qq, F_pq at the origin from the variational system");
  add_spec(hess, spec_flags);
  add_integ(hess, integ);

  auto* domain = app.add_subcommand("domain-check", "pointwise admissibility of the base control u = pi");
  add_spec(domain, spec_flags);
  domain->add_option("--grid", grid_n, "t-grid intervals")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-verify", "compare the variational Hessian with brute force");
  add_spec(oracle, spec_flags);
  integ.steps = default_oracle_integration().steps;
  add_integ(oracle, integ, "oracle integrator steps");
  oracle->add_option("--fd-step", fd_step, "finite-difference step")->capture_default_str();
  oracle->add_option("--var-steps", var_steps, "variational integrator steps")->capture_default_str();
  oracle->add_option("--coarse-grid", coarse_grid, "control solver grid size")->capture_default_str();
  integ.steps = IntegratorOptions{}.steps;

  auto* scan = app.add_subcommand("scan", "tabulate g1, g2 and the admissibility margin as CSV");
  scan->add_option("--problem", problem_name, "one-parameter family")
      ->check(CLI::IsMember({"sigma32", "sigma42", "sigma24", "sigma34", "m0"}))
      ->capture_default_str();
  add_integ(scan, integ);
  add_scan(scan, scan_flags);
  scan->add_option("--out", out_path, "CSV file (default: standard output)");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "print the result document as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  }
  // The oracle's own step default differs from the variational one.
  if (oracle->parsed() && oracle->count("--steps") == 0) integ.steps = default_oracle_integration().steps;

  const auto started = std::chrono::steady_clock::now();
  RunRecord rec;
  int status = kOk;
  try {
    if (s32->parsed()) {
      rec.command = "sigma32";
      rec.problem = Problem::Sigma32;
      const auto cfg = scan_flags.config(Problem::Sigma32, integ);
      rec.integ = cfg.integ;
      settings_from(rec, cfg);
      const double closed = sigma32();
      const SolverResult pipeline = solve(Problem::Sigma32, cfg);
      rec.result = NamedValues{{"value", closed},
                               {"pipeline_value", pipeline.value},
                               {"pipeline_difference", std::abs(pipeline.value - closed)}};
    }
    for (auto [sub, problem] : solvers) {
      if (!sub->parsed()) continue;
      rec.command = sub->get_name();
      rec.problem = problem;
      const auto cfg = scan_flags.config(problem, integ);
      rec.integ = cfg.integ;
      settings_from(rec, cfg);
      rec.result = solve(problem, cfg);
    }
    if (hess->parsed()) {
      rec.command = "hessian";
      rec.spec = spec_flags.spec();
      rec.integ = integ.options();
      require_admissible(*rec.spec);
      rec.result = hessian_of_F(*rec.spec, *rec.integ);
    }
    if (domain->parsed()) {
      rec.command = "domain-check";
      rec.spec = spec_flags.spec();
      rec.settings["grid"] = grid_n;
      const auto report = check_admissible(*rec.spec, grid_n);
      rec.result = report;
      if (!report.admissible || report.indeterminate) status = kAdmissibilityViolation;
    }
    if (oracle->parsed()) {
      rec.command = "oracle-verify";
      const ProblemSpec spec = spec_flags.spec();
      rec.spec = spec;
      rec.integ = integ.options();
      rec.settings["h"] = fd_step;
      rec.settings["var_steps"] = var_steps;
      rec.settings["coarse_grid"] = coarse_grid;
      rec.settings["tolerance"] = kOracleTolerance;
      require_admissible(spec);
      const ControlSolverOptions copts{coarse_grid, ControlSolverOptions{}.refine_iters};
      const HessianF var = hessian_of_F(spec, {Method::RK4, var_steps, false});
      const HessianF fd = fd_hessian_richardson(spec, fd_step, *rec.integ, copts);
      const double diff =
          std::max({std::abs(var.fpp - fd.fpp), std::abs(var.fqq - fd.fqq), std::abs(var.fpq - fd.fpq)});
      auto F = [&](double p, double q) { return simulate(spec, p, q, *rec.integ, copts); };
      Vec5 e2 = Vec5::Zero(), e1 = Vec5::Zero();
      e2(1) = 1.0;
      e1(0) = 1.0;
      rec.result = NamedValues{
          {"fpp_variational", var.fpp},
          {"fqq_variational", var.fqq},
          {"fpq_variational", var.fpq},
          {"fpp_oracle", fd.fpp},
          {"fqq_oracle", fd.fqq},
          {"fpq_oracle", fd.fpq},
          {"max_abs_difference", diff},
          {"gradient_p", (F(fd_step, 0) - F(-fd_step, 0)) / (2 * fd_step)},
          {"gradient_q", (F(0, fd_step) - F(0, -fd_step)) / (2 * fd_step)},
          {"conjugation_asymmetry", std::abs(F(fd_step, 0.5 * fd_step) - F(-fd_step, -0.5 * fd_step))},
          {"orthogonality_e2", lemma_checks(spec, e2, 1e-4, *rec.integ, copts).normalized_inner},
          {"degeneracy_e1", lemma_checks(spec, e1, 1e-3, *rec.integ, copts).delta_norm},
      };
      if (!(diff <= kOracleTolerance)) status = kNumericalFailure;
    }
    if (scan->parsed()) {
      rec.command = "scan";
      const Problem problem = parse_problem(problem_name);
      rec.problem = problem;
      const auto cfg = scan_flags.config(problem, integ);
      rec.integ = cfg.integ;
      settings_from(rec, cfg);
      const auto rows = scan_table(problem, cfg);
      if (out_path.empty()) {
        write_csv(out, rows);
        return kOk;
      }
      std::ofstream file(out_path);
      if (!file) throw InvalidArgument("cannot open '" + out_path + "' for writing");
      write_csv(file, rows);
      rec.result = NamedValues{{"rows", static_cast<double>(rows.size())}};
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidArguments;
  } catch (const AdmissibilityError& e) {
    err << "error: " << e.what() << "\n";
    return kAdmissibilityViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }

  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << (as_json ? serialize(rec) : to_text(rec));
  return status;
}

}  // namespace loewner::cli
