#include "shl/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

#include "shl/cweight.hpp"
#include "shl/lattice.hpp"
#include "shl/parallel.hpp"
#include "shl/poly.hpp"
#include "shl/symmetrization.hpp"

namespace shl {

nlohmann::ordered_json TruncationPlan::echo() const {
  nlohmann::ordered_json out;
  out["max_part"] = max_part;
  out["n"] = n;
  out["mode"] = mode == TruncationMode::fixed ? "fixed-M" : "adaptive";
  out["tolerance"] = rational_str(tolerance);
  return out;
}

std::optional<std::string> admissibility_violation(const ParamSet& params) {
  std::vector<Rational> svals = params.s.prefix();
  svals.push_back(params.s.tail());
  for (std::size_t i = 0; i < params.u.size(); ++i)
    for (std::size_t x = 0; x < svals.size(); ++x)
      if (!contraction_within(params.u[i], svals[x], params.epsilon)) {
        std::string where = x + 1 == svals.size() ? std::string("tail")
                                                  : std::to_string(x);
        return "inadmissible parameters: |(u_i - s_x)/(1 - s_x u_i)| > 1 - epsilon at "
               "u index " + std::to_string(i) + ", s column " + where;
      }
  return std::nullopt;
}

std::vector<Signature> even_shell(int num_parts, int max_part) {
  if (num_parts < 0 || num_parts % 2 != 0)
    throw std::invalid_argument("even_shell needs an even number of parts");
  if (max_part < 0) throw std::invalid_argument("even_shell needs max_part >= 0");
  std::vector<Signature> out;
  if (num_parts == 0) {
    if (max_part == 0) out.push_back(Signature());
    return out;
  }
  if (max_part == 0) {
    out.push_back(Signature(std::vector<int>(num_parts, 0)));
    return out;
  }
  for (const Signature& tail : enumerate_even(num_parts - 2, max_part)) {
    std::vector<int> parts;
    parts.reserve(num_parts);
    parts.push_back(max_part);
    parts.push_back(max_part);
    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
    out.push_back(Signature(std::move(parts)));
  }
  return out;
}

namespace {

void require_even_multiplicities(const Signature& lambda) {
  if (!lambda.all_multiplicities_even())
    throw std::invalid_argument("summation index must have even multiplicities");
}

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den == 0) throw std::domain_error(std::string("vanishing denominator: ") + what);
  return num / den;
}

}  // namespace

Rational littlewood_coeff(const Signature& lambda, const ParamSet& params) {
  require_even_multiplicities(lambda);
  if (params.gamma == 0) throw std::domain_error("littlewood_coeff needs gamma != 0");
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  const Rational& s0 = params.s_at(0);
  int m0 = lambda.mult(0);

  Rational out = checked_div(1, pochhammer_t(t, t, m0), "(t;t)_{m0}");
  Rational s0sq_over_gamma = s0 * s0 / gamma;
  for (int j = 1; j <= m0 / 2; ++j)
    out *= (1 - s0sq_over_gamma * pow_int(t, 2 * j - 2)) *
           (1 - gamma * pow_int(t, 2 * j - 1));
  for (const Rational& uj : params.u) out *= 1 - s0 * uj;
  for (const auto& [value, count] : lambda.multiplicities()) {
    if (value == 0) continue;
    Rational s2 = params.s_at(value) * params.s_at(value);
    for (int j = 1; j <= count / 2; ++j)
      out *= checked_div(1 - s2 * pow_int(t, 2 * j - 2), 1 - pow_int(t, 2 * j),
                         "1 - t^{2j}");
  }
  return out;
}

Rational littlewood_lhs(const ParamSet& params, const TruncationPlan& plan) {
  LatticeEvaluator eval(params);
  Rational total = 0;
  for (int m = 0; m <= plan.max_part; ++m)
    for (const Signature& lambda : even_shell(2 * plan.n, m))
      total += littlewood_coeff(lambda, params) * eval.value(lambda);
  return total;
}

Rational littlewood_rhs(const ParamSet& params) {
  params.require_identity_regular();
  if (params.gamma == 0) throw std::domain_error("littlewood_rhs needs gamma != 0");
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  const Rational& t = params.t;
  const Rational& s0 = params.s_at(0);
  Rational mixed = (1 - params.gamma) * (t - s0 * s0 / params.gamma);

  SkewMatrix entries(dim);
  Rational prefactor = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Rational uij = u[i] * u[j];
      Rational num = (u[i] - u[j]) * ((1 - t) * (1 - s0 * u[i]) * (1 - s0 * u[j]) +
                                      mixed * (1 - uij));
      entries.set(i, j, checked_div(num, (1 - uij) * (1 - t * uij),
                                    "(1 - u_i u_j)(1 - t u_i u_j)"));
      prefactor *= checked_div(1 - t * uij, u[i] - u[j], "u_i - u_j");
    }
  return prefactor * pfaffian(entries);
}

Rational z2(const ParamSet& params, const Rational& x, const Rational& y) {
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  const Rational& s0 = params.s_at(0);
  return (1 - t) * (1 - gamma * s0 * x) * (1 - gamma * s0 * y) +
         (1 - gamma) * (t - gamma * s0 * s0) * (1 - x * y);
}

SkewMatrix z2n_matrix(const ParamSet& params) {
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  SkewMatrix entries(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Rational uij = u[i] * u[j];
      entries.set(i, j,
                  checked_div(z2(params, u[i], u[j]) * (u[i] - u[j]),
                              (1 - uij) * (1 - params.t * uij),
                              "(1 - u_i u_j)(1 - t u_i u_j)"));
    }
  return entries;
}

Rational z2n_pfaffian_side(const ParamSet& params) {
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  Rational prefactor = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Rational uij = u[i] * u[j];
      prefactor *= checked_div((1 - uij) * (1 - params.t * uij), u[i] - u[j],
                               "u_i - u_j");
    }
  return prefactor * pfaffian(z2n_matrix(params));
}

Rational pfp_rhs(const ParamSet& params) {
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  const Rational& t = params.t;
  const Rational& s0 = params.s_at(0);
  Rational prefactor = 1;
  for (const Rational& uj : u) prefactor *= checked_div(1, 1 - s0 * uj, "1 - s_0 u_j");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      prefactor *= checked_div(1 - t * u[i] * u[j], u[i] - u[j], "u_i - u_j");
  return prefactor * pfaffian(z2n_matrix(params));
}

namespace {

/// (gamma t; t)_{m0}/(t; t)_{m0} * prod_j (1 - gamma s_0 u_j)/(1 - s_0 u_j),
/// the translation from F at s_0 -> gamma s_0 to the refined evaluator.
Rational alpha_prefactor(const Signature& lambda, const ParamSet& params) {
  const Rational& t = params.t;
  int m0 = lambda.mult(0);
  Rational out = checked_div(pochhammer_t(params.gamma * t, t, m0),
                             pochhammer_t(t, t, m0), "(t;t)_{m0}");
  const Rational& s0 = params.s_at(0);
  for (const Rational& uj : params.u)
    out *= checked_div(1 - params.gamma * s0 * uj, 1 - s0 * uj, "1 - s_0 u_j");
  return out;
}

}  // namespace

Rational partition_P(const ParamSet& params, const TruncationPlan& plan) {
  if ((int)params.u.size() != 2 * plan.n)
    throw std::invalid_argument("partition_P needs 2n spectral variables");
  LatticeEvaluator eval(params.with_s0(params.gamma * params.s_at(0)));
  Rational total = 0;
  for (int m = 0; m <= plan.max_part; ++m)
    for (const Signature& lambda : even_shell(2 * plan.n, m))
      total += c_weight(lambda, params) * alpha_prefactor(lambda, params) *
               eval.value(lambda);
  return total;
}

Rational class_coeff(const Signature& lambda, const ParamSet& params) {
  require_even_multiplicities(lambda);
  const Rational& t = params.t;
  Rational out = 1;
  for (const auto& [value, count] : lambda.multiplicities()) {
    const Rational& top = value == 0 ? params.gamma : Rational(1);
    for (int j = 1; j <= count / 2; ++j) out *= 1 - top * pow_int(t, 2 * j - 1);
  }
  return out;
}

Rational class_lhs(const ParamSet& params, const TruncationPlan& plan) {
  Rational total = 0;
  for (int m = 0; m <= plan.max_part; ++m)
    for (const Signature& lambda : even_shell(2 * plan.n, m))
      total += class_coeff(lambda, params) *
               hl_polynomial(lambda, params.u, params.t);
  return total;
}

Rational class_rhs(const ParamSet& params) {
  params.require_identity_regular();
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  SkewMatrix entries(dim);
  Rational prefactor = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Rational uij = u[i] * u[j];
      Rational num = (u[i] - u[j]) * (1 - gamma * t + (gamma - 1) * t * uij);
      entries.set(i, j, checked_div(num, (1 - uij) * (1 - t * uij),
                                    "(1 - u_i u_j)(1 - t u_i u_j)"));
      prefactor *= checked_div(1 - t * uij, u[i] - u[j], "u_i - u_j");
    }
  return prefactor * pfaffian(entries);
}

Rational unref_coeff(const Signature& lambda, const ParamSet& params) {
  require_even_multiplicities(lambda);
  const Rational& t = params.t;
  Rational out = 1;
  for (const auto& [value, count] : lambda.multiplicities()) {
    Rational s2 = params.s_at(value) * params.s_at(value);
    for (int j = 1; j <= count / 2; ++j)
      out *= checked_div(1 - s2 * pow_int(t, 2 * j - 2), 1 - pow_int(t, 2 * j),
                         "1 - t^{2j}");
  }
  return out;
}

Rational unref_lhs(const ParamSet& params, const TruncationPlan& plan) {
  LatticeEvaluator eval(params);
  Rational total = 0;
  for (int m = 0; m <= plan.max_part; ++m)
    for (const Signature& lambda : even_shell(2 * plan.n, m))
      total += unref_coeff(lambda, params) * eval.value(lambda);
  return total;
}

Rational unref_rhs(const ParamSet& params) {
  params.require_identity_regular();
  const std::vector<Rational>& u = params.u;
  int dim = static_cast<int>(u.size());
  const Rational& t = params.t;
  SkewMatrix entries(dim);
  Rational prefactor = 1;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Rational uij = u[i] * u[j];
      entries.set(i, j, checked_div((u[i] - u[j]) * (1 - t),
                                    (1 - uij) * (1 - t * uij),
                                    "(1 - u_i u_j)(1 - t u_i u_j)"));
      prefactor *= checked_div(1 - t * uij, u[i] - u[j], "u_i - u_j");
    }
  return prefactor * pfaffian(entries);
}

namespace {

Report error_report(const std::string& suite, const ParamSet& params,
                    const nlohmann::ordered_json& plan, const std::string& message) {
  Report report;
  report.suite = suite;
  report.params = params_echo(params);
  report.plan = plan;
  report.verdict = Verdict::error;
  report.message = message;
  return report;
}

bool eventually_decreasing(const std::vector<TracePoint>& trace, double tol) {
  if (trace.size() <= 1) return trace.empty() || trace.back().residual <= tol;
  std::size_t start = std::max<std::size_t>(1, trace.size() / 2);
  for (std::size_t m = start; m < trace.size(); ++m)
    if (trace[m].residual > trace[m - 1].residual && trace[m].residual > tol)
      return false;
  return true;
}

/// Shared driver for the truncated identity checks: accumulates shell sums,
/// records the relative float-shadow residual trace, and applies the
/// eventually-decreasing + final-tolerance verdict.
Report run_truncated(const std::string& suite, const ParamSet& params,
                     const TruncationPlan& plan,
                     const std::function<Rational(int)>& shell_sum,
                     const Rational& rhs) {
  Report report;
  report.suite = suite;
  report.params = params_echo(params);
  report.plan = plan.echo();
  Stopwatch timer;

  double scale = std::fabs(shadow(rhs));
  if (scale == 0.0) scale = 1.0;
  double tol = shadow(plan.tolerance);
  Rational sum = 0;
  int shrinking_steps = 0;
  double prev = 0.0;
  for (int m = 0; m <= plan.max_part; ++m) {
    sum += shell_sum(m);
    double rel = std::fabs(shadow(Rational(sum - rhs))) / scale;
    report.trace.push_back(TracePoint{m, rel});
    if (m > 0 && rel < prev)
      ++shrinking_steps;
    else if (m > 0)
      shrinking_steps = 0;
    prev = rel;
    if (plan.mode == TruncationMode::adaptive && shrinking_steps >= 3 && rel <= tol)
      break;
  }
  report.set_sides(sum, rhs);
  bool final_ok = report.trace.back().residual <= tol;
  bool decay_ok = eventually_decreasing(report.trace, tol);
  report.verdict = final_ok && decay_ok ? Verdict::pass : Verdict::fail;
  if (!final_ok)
    report.message = "final relative residual above tolerance";
  else if (!decay_ok)
    report.message = "residual trace is not eventually decreasing";
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

void gate_common(const ParamSet& params, const TruncationPlan& plan) {
  params.validate_basic();
  params.require_identity_regular();
  if ((int)params.u.size() != 2 * plan.n)
    throw std::invalid_argument("identity checks need exactly 2n spectral variables");
  if (plan.max_part < 0) throw std::invalid_argument("max_part must be nonnegative");
  if (plan.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  if (auto violation = admissibility_violation(params))
    throw std::domain_error(*violation);
}

}  // namespace

Report check_littlewood(const ParamSet& params, const TruncationPlan& plan) {
  try {
    gate_common(params, plan);
    Rational rhs = littlewood_rhs(params);
    LatticeEvaluator eval(params);
    auto shell_sum = [&](int m) {
      Rational out = 0;
      for (const Signature& lambda : even_shell(2 * plan.n, m))
        out += littlewood_coeff(lambda, params) * eval.value(lambda);
      return out;
    };
    return run_truncated("littlewood", params, plan, shell_sum, rhs);
  } catch (const std::exception& e) {
    return error_report("littlewood", params, plan.echo(), e.what());
  }
}

Report check_class_specialization(const ParamSet& params, const TruncationPlan& plan) {
  try {
    for (const Rational& sx : params.s.prefix())
      if (sx != 0)
        throw std::invalid_argument("class specialization needs s == 0 everywhere");
    if (params.s.tail() != 0)
      throw std::invalid_argument("class specialization needs s == 0 everywhere");
    gate_common(params, plan);
    Rational rhs = class_rhs(params);
    auto shell_sum = [&](int m) {
      Rational out = 0;
      for (const Signature& lambda : even_shell(2 * plan.n, m))
        out += class_coeff(lambda, params) *
               hl_polynomial(lambda, params.u, params.t);
      return out;
    };
    return run_truncated("class", params, plan, shell_sum, rhs);
  } catch (const std::exception& e) {
    return error_report("class", params, plan.echo(), e.what());
  }
}

Report check_unrefined(const ParamSet& params, const TruncationPlan& plan) {
  try {
    if (params.gamma != 1)
      throw std::invalid_argument("unrefined identity needs gamma = 1");
    gate_common(params, plan);
    Rational rhs = unref_rhs(params);
    LatticeEvaluator eval(params);
    auto shell_sum = [&](int m) {
      Rational out = 0;
      for (const Signature& lambda : even_shell(2 * plan.n, m))
        out += unref_coeff(lambda, params) * eval.value(lambda);
      return out;
    };
    return run_truncated("unrefined", params, plan, shell_sum, rhs);
  } catch (const std::exception& e) {
    return error_report("unrefined", params, plan.echo(), e.what());
  }
}

Report check_pfp(const ParamSet& params, const TruncationPlan& plan) {
  try {
    gate_common(params, plan);
    Rational rhs = pfp_rhs(params);
    ParamSet shifted = params.with_s0(params.gamma * params.s_at(0));
    LatticeEvaluator eval(shifted);
    auto shell_sum = [&](int m) {
      Rational out = 0;
      for (const Signature& lambda : even_shell(2 * plan.n, m))
        out += c_weight(lambda, params) * alpha_prefactor(lambda, params) *
               eval.value(lambda);
      return out;
    };
    Report report = run_truncated("pfp", params, plan, shell_sum, rhs);
    if (report.verdict != Verdict::pass || plan.n > 2) return report;

    // Substitution audit: with s_0 -> gamma s_0 the refined Littlewood terms
    // must reproduce these terms times prod_j (1 - s_0 u_j), exactly.
    Rational su_product = 1;
    for (const Rational& uj : params.u) su_product *= 1 - params.s_at(0) * uj;
    Rational worst = 0;
    for (const Signature& lambda : enumerate_even(2 * plan.n, 4)) {
      Rational value = eval.value(lambda);
      Rational theorem_term = littlewood_coeff(lambda, shifted) * value;
      Rational lattice_term = c_weight(lambda, params) *
                              alpha_prefactor(lambda, params) * value * su_product;
      worst = std::max(worst, Rational(abs(Rational(theorem_term - lattice_term))));
    }
    Rational rhs_gap = abs(Rational(littlewood_rhs(shifted) - rhs * su_product));
    worst = std::max(worst, rhs_gap);
    if (worst != 0) {
      report.verdict = Verdict::fail;
      report.message = "substitution audit residual " + rational_str(worst);
    }
    return report;
  } catch (const std::exception& e) {
    return error_report("pfp", params, plan.echo(), e.what());
  }
}

namespace {

Rational z2n_at(const ParamSet& base, std::vector<Rational> u) {
  ParamSet modified = base;
  modified.u = std::move(u);
  return z2n_pfaffian_side(modified);
}

bool evaluation_regular(const Rational& t, const std::vector<Rational>& u) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j]) return false;
      if (u[i] * u[j] == 1) return false;
      if (t * u[i] * u[j] == 1) return false;
    }
  return true;
}

}  // namespace

Report check_z_properties(const ParamSet& params, int n) {
  Report report;
  report.suite = "z-properties";
  report.params = params_echo(params);
  report.params["n"] = n;
  Stopwatch timer;
  try {
    if (n < 1 || n > 4)
      throw std::invalid_argument("z-properties supports 1 <= n <= 4");
    if ((int)params.u.size() != 2 * n)
      throw std::invalid_argument("z-properties needs exactly 2n spectral variables");
    params.validate_basic();
    params.require_identity_regular();
    if (params.gamma == 0) throw std::domain_error("z-properties needs gamma != 0");

    const Rational& t = params.t;
    const Rational& gamma = params.gamma;
    const Rational& s0 = params.s_at(0);
    Rational worst = 0;
    std::string failures;
    auto note = [&](const char* name, bool ok) {
      if (!ok) failures += failures.empty() ? name : std::string("; ") + name;
    };

    // 1: invariance under adjacent transpositions.
    Rational base = z2n_pfaffian_side(params);
    bool p1_ok = true;
    for (int k = 0; k + 1 < 2 * n; ++k) {
      std::vector<Rational> swapped = params.u;
      std::swap(swapped[k], swapped[k + 1]);
      Rational diff = abs(Rational(z2n_at(params, std::move(swapped)) - base));
      worst = std::max(worst, diff);
      if (diff != 0) p1_ok = false;
    }
    note("property 1 (symmetry)", p1_ok);

    // 2 and 3 share one interpolation in the last variable, sampled at
    // 2n + 2 abscissae drawn from a fixed seeded stream with rejection of
    // singular collisions.
    std::vector<Rational> head(params.u.begin(), params.u.end() - 1);
    std::mt19937_64 rng(0x5eed2024ULL);
    std::vector<std::pair<Rational, Rational>> samples;
    int attempts = 0;
    while ((int)samples.size() < 2 * n + 2) {
      if (++attempts > 20000)
        throw std::domain_error("abscissa sampling exhausted the retry cap");
      long num = static_cast<long>(rng() % 81) - 40;
      long den = static_cast<long>(rng() % 41) + 1;
      if (num == 0) continue;
      Rational x(num, den);
      x.canonicalize();
      bool fresh = true;
      for (const auto& [seen, unused] : samples)
        if (seen == x) fresh = false;
      if (!fresh) continue;
      std::vector<Rational> u = head;
      u.push_back(x);
      if (!evaluation_regular(t, u)) continue;
      samples.emplace_back(x, z2n_at(params, std::move(u)));
    }
    Poly in_last = interpolate(samples);
    bool p2_ok = in_last.degree() == 2 * n - 1;
    note("property 2 (degree)", p2_ok);

    const Rational& pivot = params.u[2 * n - 2];
    Rational reflected = 1 / pivot;
    Rational reduced = 1;
    if (n > 1)
      reduced = z2n_at(params, std::vector<Rational>(params.u.begin(),
                                                     params.u.begin() + 2 * n - 2));
    Rational recursion_rhs =
        (1 - t) * (1 - gamma * s0 * reflected) * (1 - gamma * s0 * pivot) * reduced;
    for (int j = 0; j + 2 < 2 * n; ++j)
      recursion_rhs *= (1 - t * params.u[j] * reflected) * (1 - t * params.u[j] * pivot);
    Rational p3_diff = abs(Rational(in_last(reflected) - recursion_rhs));
    worst = std::max(worst, p3_diff);
    note("property 3 (recursion)", p3_diff == 0);

    // 4: the (t, 1/t^2, ...) specialization, reached along a rational line
    // because the target point collides with the evaluation denominators.
    std::vector<Rational> target(2 * n);
    std::vector<Rational> direction(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      target[k] = k % 2 == 0 ? t : 1 / (t * t);
      direction[k] = Rational(1, 29 + k);
    }
    int needed = 2 * n * (2 * n - 1) + 1;
    std::vector<Rational> ws;
    std::vector<std::vector<Rational>> points;
    for (int j = 1; (int)ws.size() < needed; ++j) {
      if (j > 20000)
        throw std::domain_error("line sampling exhausted the retry cap");
      Rational w(j, 97);
      w.canonicalize();
      std::vector<Rational> u(2 * n);
      for (int k = 0; k < 2 * n; ++k) u[k] = target[k] + direction[k] * w;
      if (!evaluation_regular(t, u)) continue;
      ws.push_back(w);
      points.push_back(std::move(u));
    }
    std::vector<std::pair<Rational, Rational>> line(needed);
    parallel_for(static_cast<std::size_t>(needed), [&](std::size_t idx) {
      line[idx] = {ws[idx], z2n_at(params, points[idx])};
    });
    Rational specialized = interpolate_at(line, 0);

    Rational pinned = pow_int(gamma, n) * pow_int(t - 1, n * n) * pow_int(t, -2 * n) *
                      pow_int(-(t - 1 / t) * (t - 1 / t), n * (n - 1) / 2) *
                      pow_int(1 - s0 / (t * t), n) * pow_int(1 - s0 * t, n);
    Rational p4_diff = abs(Rational(specialized - pinned));
    worst = std::max(worst, p4_diff);
    bool p4_ok = p4_diff == 0;
    note("property 4 (specialization closed form)", p4_ok);
    if (!p4_ok) {
      Rational consistent = pow_int(gamma, n) * pow_int(1 - t, n * n) *
                            pow_int((1 - t * t) * (1 - pow_int(t, -4)), n * (n - 1) / 2) *
                            pow_int(1 - s0 / (t * t), n) * pow_int(1 - s0 * t, n);
      if (specialized == consistent)
        report.message =
            "property 4: the pinned closed form differs from the direct "
            "specialization; the direct value equals gamma^n (1-t)^{n^2} "
            "((1-t^2)(1-t^{-4}))^{n(n-1)/2} (1-s0 t^{-2})^n (1-s0 t)^n. ";
    }

    // 5: the two-variable kernel.
    Rational p5_diff = abs(Rational(
        z2n_at(params, {params.u[0], params.u[1]}) - z2(params, params.u[0], params.u[1])));
    worst = std::max(worst, p5_diff);
    note("property 5 (kernel)", p5_diff == 0);

    report.residual = rational_str(worst);
    report.verdict = failures.empty() ? Verdict::pass : Verdict::fail;
    if (!failures.empty()) report.message += "failed: " + failures;
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

Rational frozen_entry(const ParamSet& params, int n, int i, int j) {
  if (n < 1) throw std::invalid_argument("frozen_entry needs n >= 1");
  if (i < 1 || j < 1 || i >= j || j > 2 * n)
    throw std::invalid_argument("frozen_entry needs 1 <= i < j <= 2n");
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  const Rational& s0 = params.s_at(0);
  if (t == 0) throw std::domain_error("frozen specialization needs t != 0");
  Rational gs = gamma * s0;
  if (gs == 0) throw std::domain_error("frozen specialization needs gamma*s_0 != 0");

  Rational gs2 = gs * gs;
  Rational t2n = pow_int(t, 2 * n);
  Rational num = (pow_int(t, j) - pow_int(t, i)) *
                 (gs2 * (1 - t) * (pow_int(t, i) - t2n) * (pow_int(t, j) - t2n) +
                  (1 - gamma) * (t - s0 * s0 * gamma) *
                      (pow_int(t, i + j) * gs2 - pow_int(t, 4 * n)));
  Rational den = pow_int(t, 2 * i + 2 * j - 2 * n) * gs *
                 (gs - pow_int(t, 4 * n - i - j) / gs) *
                 (gs - pow_int(t, 4 * n + 1 - i - j) / gs);
  return checked_div(num, den, "frozen entry denominator");
}

Rational frozen_closed_product(const ParamSet& params, int n) {
  if (n < 1) throw std::invalid_argument("frozen_closed_product needs n >= 1");
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  const Rational& s0 = params.s_at(0);
  if (t == 0) throw std::domain_error("frozen specialization needs t != 0");
  if (gamma == 0) throw std::domain_error("frozen specialization needs gamma != 0");
  Rational gs = gamma * s0;
  if (gs == 0) throw std::domain_error("frozen specialization needs gamma*s_0 != 0");

  Rational out = pow_int(Rational(-1), n) * pow_int(gamma, n) * pow_int(t, n * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j)
      out *= checked_div(pow_int(t, j) - pow_int(t, i),
                         gs - pow_int(t, i + j + 1) / gs,
                         "gamma s_0 - t^{i+j+1}/(gamma s_0)");
  for (int j = 1; j <= n; ++j)
    out *= (1 - s0 * s0 * gamma * pow_int(t, -2 * j + 1)) *
           (1 - pow_int(t, 2 * j - 2) / gamma);
  return out;
}

Report check_frozen_corollary(const ParamSet& params, int n) {
  Report report;
  report.suite = "frozen";
  report.params = params_echo(params);
  report.params["n"] = n;
  Stopwatch timer;
  try {
    if (n < 1) throw std::invalid_argument("frozen corollary needs n >= 1");
    SkewMatrix entries(2 * n);
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = i + 1; j <= 2 * n; ++j)
        entries.set(i - 1, j - 1, frozen_entry(params, n, i, j));
    Rational lhs = pfaffian(entries);
    Rational rhs = frozen_closed_product(params, n);
    report.set_sides(lhs, rhs);
    report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

}  // namespace shl
