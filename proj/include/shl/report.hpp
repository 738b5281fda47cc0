#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "shl/params.hpp"
#include "shl/rational.hpp"

namespace shl {

enum class Verdict { pass, fail, error, unsupported };

std::string verdict_str(Verdict v);

/// Exit code for a suite outcome: pass 0, fail 1, error 2, unsupported 3.
int verdict_exit_code(Verdict v);

/// An exact rational value together with its double shadow.
struct ExactValue {
  std::string exact;
  double shadow = 0.0;

  ExactValue() = default;
  explicit ExactValue(const Rational& value);
};

/// One partial-sum trace point: truncation level and float residual.
struct TracePoint {
  int max_part = 0;
  double residual = 0.0;
};

/// Outcome of one named check, serializable as a stable-keyed JSON object
/// {suite, params, plan, lhs, rhs, residual, trace, verdict, runtime_ms,
/// version} (plus "message" when a check has something to explain).
struct Report {
  std::string suite;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json plan;  // null unless the check truncates
  std::optional<ExactValue> lhs;
  std::optional<ExactValue> rhs;
  std::optional<std::string> residual;
  std::vector<TracePoint> trace;
  Verdict verdict = Verdict::error;
  long runtime_ms = 0;
  std::string message;

  void set_sides(const Rational& lhs_value, const Rational& rhs_value);

  nlohmann::ordered_json to_json() const;
};

/// Parameter echo used in every report: exact strings only.
nlohmann::ordered_json params_echo(const ParamSet& params);

/// Wall-clock helper for runtime_ms fields.
class Stopwatch {
 public:
  Stopwatch();
  long elapsed_ms() const;

 private:
  long long start_ns_;
};

}  // namespace shl
