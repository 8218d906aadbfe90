#include "loewner/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "loewner/errors.hpp"

namespace loewner {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::LFunctional:
      return "L";
    case Variant::Sigma24:
      return "S24";
    case Variant::Sigma34:
      return "S34";
    case Variant::A4Bound:
      return "A4";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "L" || name == "linear") return Variant::LFunctional;
  if (name == "S24" || name == "sigma24") return Variant::Sigma24;
  if (name == "S34" || name == "sigma34") return Variant::Sigma34;
  if (name == "A4" || name == "a4") return Variant::A4Bound;
  throw InvalidArgument("unknown variant '" + std::string(name) + "' (expected L, S24, S34, A4)");
}

namespace {

void require_bound(double M) {
  if (std::isnan(M) || M < 1.0) throw InvalidArgument("bound M must be >= 1, got " + std::to_string(M));
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw InvalidArgument(std::string(name) + " must be finite");
}

}  // namespace

ProblemSpec ProblemSpec::linear(double mu, double nu, double M) {
  require_finite(mu, "mu");
  require_finite(nu, "nu");
  require_bound(M);
  return {Variant::LFunctional, mu, nu, M};
}

ProblemSpec ProblemSpec::sigma24(double nu) {
  require_finite(nu, "nu");
  return {Variant::Sigma24, 0.0, nu, kInf};
}

ProblemSpec ProblemSpec::sigma34(double mu) {
  require_finite(mu, "mu");
  return {Variant::Sigma34, mu, 0.0, kInf};
}

ProblemSpec ProblemSpec::a4_bound(double M) {
  require_bound(M);
  if (!std::isfinite(M)) throw InvalidArgument("A4 bound problem needs a finite M");
  return {Variant::A4Bound, 0.0, 0.0, M};
}

ProblemSpec::Weights ProblemSpec::objective_weights() const noexcept {
  switch (variant) {
    case Variant::LFunctional:
      return {1.0, mu, nu};
    case Variant::Sigma24:
      return {nu, 0.0, 1.0};
    case Variant::Sigma34:
      return {0.0, mu, 1.0};
    case Variant::A4Bound:
      return {0.0, 0.0, 1.0};
  }
  return {0.0, 0.0, 0.0};
}

double checked_time(const ProblemSpec& spec, double t) {
  const double T = spec.horizon();
  constexpr double slack = 1e-13;
  if (!(t >= -slack && t <= T + slack)) {
    throw InvalidArgument("time " + std::to_string(t) + " outside [0, " + std::to_string(T) + "]");
  }
  return std::clamp(t, 0.0, T);
}

double parse_bound(std::string_view text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return kInf;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw InvalidArgument("cannot parse bound '" + std::string(text) + "'");
  require_bound(value);
  return value;
}

}  // namespace loewner
