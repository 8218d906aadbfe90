#include "loewner/run_record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "loewner/errors.hpp"

namespace loewner {

using json = nlohmann::ordered_json;

namespace {

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round12(x);
}

double read_number(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
    throw InvalidArgument("unexpected string '" + s + "' where a number was expected");
  }
  return j.get<double>();
}

json pair_json(std::pair<double, double> p) { return json::array({number(p.first), number(p.second)}); }

std::pair<double, double> read_pair(const json& j) { return {read_number(j.at(0)), read_number(j.at(1))}; }

json result_json(const RunResult& result) {
  return std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        json j;
        if constexpr (std::is_same_v<T, SolverResult>) {
          j["type"] = "solver";
          j["value"] = number(r.value);
          j["attained_by"] = std::string(to_string(r.attained_by));
          j["root_param"] = number(r.root_param);
          j["bracket"] = pair_json(r.bracket);
          j["g_values_at_bracket"] = pair_json(r.g_values_at_bracket);
          j["admissibility_margin"] = number(r.admissibility_margin);
          j["step_halving_delta"] = number(r.step_halving_delta);
        } else if constexpr (std::is_same_v<T, HessianF>) {
          j["type"] = "hessian";
          j["fpp"] = number(r.fpp);
          j["fqq"] = number(r.fqq);
          j["fpq"] = number(r.fpq);
          j["det"] = number(r.det());
        } else if constexpr (std::is_same_v<T, AdmissibilityReport>) {
          j["type"] = "admissibility";
          j["admissible"] = r.admissible;
          j["indeterminate"] = r.indeterminate;
          j["min_gap"] = number(r.min_gap);
          j["min_abs_huu"] = number(r.min_abs_huu);
          j["worst_t"] = number(r.worst_t);
          j["grid_n"] = r.grid_n;
        } else {
          j["type"] = "values";
          for (const auto& [k, v] : r) j[k] = number(v);
        }
        return j;
      },
      result);
}

RunResult read_result(const json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "solver") {
    SolverResult r;
    r.value = read_number(j.at("value"));
    r.attained_by = j.at("attained_by").get<std::string>() == "determinant" ? Attainment::Determinant
                                                                            : Attainment::FirstMinor;
    r.root_param = read_number(j.at("root_param"));
    r.bracket = read_pair(j.at("bracket"));
    r.g_values_at_bracket = read_pair(j.at("g_values_at_bracket"));
    r.admissibility_margin = read_number(j.at("admissibility_margin"));
    r.step_halving_delta = read_number(j.at("step_halving_delta"));
    return r;
  }
  if (type == "hessian") {
    return HessianF{read_number(j.at("fpp")), read_number(j.at("fqq")), read_number(j.at("fpq"))};
  }
  if (type == "admissibility") {
    AdmissibilityReport r;
    r.admissible = j.at("admissible").get<bool>();
    r.indeterminate = j.at("indeterminate").get<bool>();
    r.min_gap = read_number(j.at("min_gap"));
    r.min_abs_huu = read_number(j.at("min_abs_huu"));
    r.worst_t = read_number(j.at("worst_t"));
    r.grid_n = j.at("grid_n").get<int>();
    return r;
  }
  if (type == "values") {
    NamedValues values;
    for (const auto& [k, v] : j.items()) {
      if (k != "type") values.emplace_back(k, read_number(v));
    }
    return values;
  }
  throw InvalidArgument("unknown result type '" + type + "'");
}

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": ";
  if (j.is_string()) {
    out << j.get<std::string>();
  } else if (j.is_number_float()) {
    out << format_number(j.get<double>());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << (i ? " " : "");
      out << (j[i].is_number() ? format_number(j[i].get<double>()) : j[i].get<std::string>());
    }
  } else {
    out << j.dump();
  }
  out << '\n';
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  const auto same_integ = [](const std::optional<IntegratorOptions>& x, const std::optional<IntegratorOptions>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->method == y->method && x->steps == y->steps);
  };
  return a.command == b.command && a.spec == b.spec && a.problem == b.problem && same_integ(a.integ, b.integ) &&
         a.settings == b.settings && a.result == b.result && a.wall_time == b.wall_time &&
         a.tool_version == b.tool_version;
}

json to_json(const RunRecord& r) {
  json j;
  j["command"] = r.command;
  j["tool_version"] = r.tool_version;
  if (r.problem) j["problem"] = std::string(to_string(*r.problem));
  if (r.spec) {
    j["spec"] = {{"variant", std::string(to_string(r.spec->variant))},
                 {"mu", number(r.spec->mu)},
                 {"nu", number(r.spec->nu)},
                 {"M", number(r.spec->M)},
                 {"T", number(r.spec->horizon())}};
  }
  if (r.integ) j["integrator"] = {{"method", std::string(to_string(r.integ->method))}, {"steps", r.integ->steps}};
  if (!r.settings.empty()) {
    json s = json::object();
    for (const auto& [k, v] : r.settings) s[k] = number(v);
    j["settings"] = s;
  }
  j["result"] = result_json(r.result);
  j["wall_time"] = number(r.wall_time);
  return j;
}

RunRecord from_json(const json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  if (j.contains("problem")) r.problem = parse_problem(j["problem"].get<std::string>());
  if (j.contains("spec")) {
    const auto& s = j["spec"];
    r.spec = ProblemSpec{parse_variant(s.at("variant").get<std::string>()), read_number(s.at("mu")),
                         read_number(s.at("nu")), read_number(s.at("M"))};
  }
  if (j.contains("integrator")) {
    const auto& i = j["integrator"];
    r.integ = IntegratorOptions{parse_method(i.at("method").get<std::string>()), i.at("steps").get<int>(), false};
  }
  if (j.contains("settings")) {
    for (const auto& [k, v] : j["settings"].items()) r.settings[k] = read_number(v);
  }
  r.result = read_result(j.at("result"));
  r.wall_time = read_number(j.at("wall_time"));
  return r;
}

std::string serialize(const RunRecord& r) { return to_json(r).dump(2) + "\n"; }

RunRecord parse(const std::string& text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed run record: ") + e.what());
  }
}

std::string to_text(const RunRecord& r) {
  std::ostringstream out;
  flatten(to_json(r), "", out);
  return out.str();
}

}  // namespace loewner
