#include "shl/report.hpp"

#include <chrono>

#include "shl/version.hpp"

namespace shl {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::error: return "error";
    case Verdict::unsupported: return "unsupported";
  }
  return "error";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::error: return 2;
    case Verdict::unsupported: return 3;
  }
  return 2;
}

ExactValue::ExactValue(const Rational& value)
    : exact(rational_str(value)), shadow(shl::shadow(value)) {}

void Report::set_sides(const Rational& lhs_value, const Rational& rhs_value) {
  lhs = ExactValue(lhs_value);
  rhs = ExactValue(rhs_value);
  residual = rational_str(abs(Rational(lhs_value - rhs_value)));
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json out;
  out["suite"] = suite;
  out["params"] = params;
  out["plan"] = plan.is_null() ? nlohmann::ordered_json() : plan;
  auto side = [](const std::optional<ExactValue>& v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    nlohmann::ordered_json j;
    j["exact"] = v->exact;
    j["shadow"] = v->shadow;
    return j;
  };
  out["lhs"] = side(lhs);
  out["rhs"] = side(rhs);
  out["residual"] = residual ? nlohmann::ordered_json(*residual) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json trace_json = nlohmann::ordered_json::array();
  for (const TracePoint& point : trace) {
    nlohmann::ordered_json entry;
    entry["max_part"] = point.max_part;
    entry["residual"] = point.residual;
    trace_json.push_back(entry);
  }
  out["trace"] = trace_json;
  out["verdict"] = verdict_str(verdict);
  out["runtime_ms"] = runtime_ms;
  out["version"] = kVersion;
  if (!message.empty()) out["message"] = message;
  return out;
}

nlohmann::ordered_json params_echo(const ParamSet& params) {
  nlohmann::ordered_json out;
  out["t"] = rational_str(params.t);
  out["gamma"] = rational_str(params.gamma);
  nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
  for (const Rational& sx : params.s.prefix()) prefix.push_back(rational_str(sx));
  out["s_prefix"] = prefix;
  out["s_tail"] = rational_str(params.s.tail());
  nlohmann::ordered_json uvals = nlohmann::ordered_json::array();
  for (const Rational& ui : params.u) uvals.push_back(rational_str(ui));
  out["u"] = uvals;
  out["epsilon"] = rational_str(params.epsilon);
  return out;
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

long Stopwatch::elapsed_ms() const {
  long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now().time_since_epoch())
                      .count();
  return static_cast<long>((now - start_ns_) / 1000000);
}

}  // namespace shl
