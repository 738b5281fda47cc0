#include "shl/acceptance.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "shl/checks.hpp"
#include "shl/cweight.hpp"
#include "shl/identities.hpp"
#include "shl/lattice.hpp"
#include "shl/matrix.hpp"
#include "shl/paramgen.hpp"
#include "shl/poly.hpp"
#include "shl/report.hpp"
#include "shl/symmetrization.hpp"
#include "shl/weights.hpp"

namespace shl {

namespace {

constexpr double kTraceFloor = 1e-13;
constexpr double kRatioBound = 0.2;

std::string fmt_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", value);
  return buf;
}

/// Geometric-decay audit of a truncation trace: from the third shell on,
/// every residual still above the float noise floor must shrink by at
/// least the pinned factor.
std::pair<bool, double> audit_trace(const Report& report) {
  bool ok = true;
  double worst = 0.0;
  for (std::size_t m = 2; m < report.trace.size(); ++m) {
    if (report.trace[m - 1].residual <= kTraceFloor) continue;
    double ratio = report.trace[m].residual / report.trace[m - 1].residual;
    worst = std::max(worst, ratio);
    if (ratio > kRatioBound) ok = false;
  }
  return {ok, worst};
}

Rational tol_pow10(int k) { return Rational(1) / pow_int(Rational(10), k); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& text) {
    if (!detail.empty()) detail += "; ";
    detail += text;
  }
};

ParamShape loose_shape(int n_vars) {
  ParamShape shape;
  shape.n_vars = n_vars;
  return shape;
}

ParamShape admissible_shape(int n_vars, const Rational& epsilon) {
  ParamShape shape;
  shape.n_vars = n_vars;
  shape.needs_admissible = true;
  shape.epsilon = epsilon;
  return shape;
}

const Rational kTightEpsilon(13, 20);  // contraction ratio <= 0.35

struct IdentityRegime {
  int n;
  std::vector<std::uint64_t> seeds;
  int max_part;
  Rational tolerance;
};

std::vector<IdentityRegime> identity_regimes(std::uint64_t base) {
  return {
      {1, {base + 1, base + 2}, 16, tol_pow10(10)},
      {2, {base + 11, base + 12}, 16, tol_pow10(10)},
      {3, {base + 21}, 10, tol_pow10(6)},
  };
}

void run_identity_regimes(Outcome& out, std::uint64_t seed_base,
                          const std::function<ParamShape(int)>& shape_for,
                          const std::function<Report(const ParamSet&,
                                                     const TruncationPlan&)>& check) {
  double worst_ratio = 0.0;
  for (const IdentityRegime& regime : identity_regimes(seed_base)) {
    for (std::uint64_t seed : regime.seeds) {
      ParamSet params = generate_params(seed, shape_for(regime.n));
      TruncationPlan plan;
      plan.n = regime.n;
      plan.max_part = regime.max_part;
      plan.tolerance = regime.tolerance;
      Report report = check(params, plan);
      if (report.verdict != Verdict::pass) {
        out.fail("seed " + std::to_string(seed) + " n=" + std::to_string(regime.n) +
                 ": " + verdict_str(report.verdict) +
                 (report.message.empty() ? "" : " (" + report.message + ")"));
        continue;
      }
      auto [decay_ok, ratio] = audit_trace(report);
      worst_ratio = std::max(worst_ratio, ratio);
      if (!decay_ok)
        out.fail("seed " + std::to_string(seed) + " n=" + std::to_string(regime.n) +
                 ": observed trace ratio " + fmt_double(ratio) + " > 0.2");
    }
  }
  if (out.ok) out.note("max observed trace ratio " + fmt_double(worst_ratio));
}

// --- criterion bodies -------------------------------------------------------

Outcome criterion_weight_pinning() {
  Outcome out;
  int points = 0;
  for (std::uint64_t seed = 201; seed <= 220; ++seed) {
    ParamSet params = generate_params(seed, admissible_shape(3, Rational(1, 10)));
    Report report = check_lattice_vs_sym(params, 3, 4);
    ++points;
    if (report.verdict != Verdict::pass)
      out.fail("seed " + std::to_string(seed) + ": " + report.message);
  }
  if (out.ok)
    out.note(std::to_string(points) + " parameter points, all signatures with "
             "N <= 3 parts and parts <= 4, exact agreement");
  return out;
}

Outcome criterion_exchange_relation() {
  Outcome out;
  for (std::uint64_t seed = 301; seed <= 320; ++seed) {
    ParamSet params = generate_params(seed, loose_shape(2));
    Report report = check_ybe_rll(params, params.u[0], params.u[1], 6);
    if (report.verdict != Verdict::pass)
      out.fail("seed " + std::to_string(seed) + ": " +
               verdict_str(report.verdict) + " " + report.message);
  }
  if (out.ok) out.note("20 seeded points, occupancies <= 6, residual exactly 0");
  return out;
}

ParamSet lemma_params(std::uint64_t seed) {
  // gamma is pinned to {1, 2, 1/3} afterwards; t = 1/2 is the only rational
  // t in (0,1) that can make 1 - gamma t^k vanish for those values.
  for (int bump = 0; bump < 50; ++bump) {
    ParamSet params = generate_params(seed + 100000ULL * bump, loose_shape(1));
    if (params.t != Rational(1, 2)) return params;
  }
  throw std::runtime_error("could not draw lemma parameters away from t = 1/2");
}

Outcome criterion_closure_balance() {
  Outcome out;
  std::vector<Signature> mus = {Signature::parse("[0]"), Signature::parse("[3,2,2]"),
                                Signature::parse("[6,4,4,3,2,2,0]")};
  for (std::uint64_t seed = 401; seed <= 410; ++seed)
    mus.push_back(generate_odd_signature(seed, 7, 6));

  Signature fig = Signature::parse("[6,4,4,3,2,2,0]");
  if (even_closure_up(fig).value() != Signature::parse("[6,6,4,4,2,2,0,0]"))
    out.fail("upper closure of [6,4,4,3,2,2,0] is wrong");
  if (even_closure_down(fig).value() != Signature::parse("[4,4,3,3,2,2]"))
    out.fail("lower closure of [6,4,4,3,2,2,0] is wrong");

  const std::vector<Rational> gammas = {Rational(1), Rational(2), Rational(1, 3)};
  int runs = 0;
  for (std::size_t k = 0; k < mus.size(); ++k) {
    ParamSet params = lemma_params(460 + k);
    for (const Rational& gamma : gammas) {
      params.gamma = gamma;
      Report report = check_lemma_plus(mus[k], params);
      ++runs;
      if (report.verdict != Verdict::pass)
        out.fail("mu=" + mus[k].str() + " gamma=" + rational_str(gamma) + ": " +
                 verdict_str(report.verdict) +
                 (report.message.empty() ? "" : " (" + report.message + ")"));
    }
  }
  if (out.ok)
    out.note(std::to_string(runs) + " closure balances exact, both closure "
             "shapes reproduced");
  return out;
}

Outcome criterion_z_properties() {
  Outcome out;
  std::vector<std::string> failed_runs;
  std::string shared_message;
  bool uniform = true;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t j = 1; j <= 5; ++j) {
      std::uint64_t seed = 500 + 10 * static_cast<std::uint64_t>(n) + j;
      ParamSet params = generate_params(seed, loose_shape(2 * n));
      Report report = check_z_properties(params, n);
      if (report.verdict == Verdict::pass) continue;
      failed_runs.push_back("seed " + std::to_string(seed) +
                            " n=" + std::to_string(n) + " " +
                            verdict_str(report.verdict));
      if (shared_message.empty())
        shared_message = report.message;
      else if (shared_message != report.message)
        uniform = false;
    }
  if (failed_runs.empty()) {
    out.note("15 seeded runs, all five properties exact");
    return out;
  }
  // Collapse identical diagnostics so the shared root cause reads once.
  if (uniform) {
    std::string joined;
    for (const auto& run : failed_runs)
      joined += (joined.empty() ? "" : ", ") + run;
    out.fail(std::to_string(failed_runs.size()) + "/15 runs fail (" + joined +
             "), every one with the same diagnostic: " + shared_message);
  } else {
    for (const auto& run : failed_runs) out.fail(run);
  }
  return out;
}

Outcome criterion_frozen() {
  Outcome out;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t j = 1; j <= 5; ++j) {
      std::uint64_t seed = 600 + 10 * static_cast<std::uint64_t>(n) + j;
      ParamSet params = generate_params(seed, loose_shape(0));
      Report report = check_frozen_corollary(params, n);
      if (report.verdict != Verdict::pass)
        out.fail("seed " + std::to_string(seed) + " n=" + std::to_string(n) + ": " +
                 verdict_str(report.verdict) +
                 (report.message.empty() ? "" : " (" + report.message + ")"));
    }
  if (out.ok) out.note("15 seeded runs, Pfaffian equals closed product exactly");
  return out;
}

Outcome criterion_littlewood() {
  Outcome out;
  run_identity_regimes(
      out, 700, [](int n) { return admissible_shape(2 * n, kTightEpsilon); },
      [](const ParamSet& p, const TruncationPlan& plan) {
        return check_littlewood(p, plan);
      });
  return out;
}

Outcome criterion_pfp() {
  Outcome out;
  run_identity_regimes(
      out, 800,
      [](int n) {
        ParamShape shape = admissible_shape(2 * n, kTightEpsilon);
        shape.shifted_admissible = true;
        return shape;
      },
      [](const ParamSet& p, const TruncationPlan& plan) { return check_pfp(p, plan); });
  if (out.ok) out.note("substitution audit exact per signature (n <= 2, parts <= 4)");
  return out;
}

Outcome criterion_specializations() {
  Outcome out;
  run_identity_regimes(
      out, 900,
      [](int n) {
        ParamShape shape = admissible_shape(2 * n, kTightEpsilon);
        shape.s_mode = SMode::zero;
        return shape;
      },
      [](const ParamSet& p, const TruncationPlan& plan) {
        return check_class_specialization(p, plan);
      });
  run_identity_regimes(
      out, 930,
      [](int n) {
        ParamShape shape = admissible_shape(2 * n, kTightEpsilon);
        shape.unit_gamma = true;
        return shape;
      },
      [](const ParamSet& p, const TruncationPlan& plan) {
        return check_unrefined(p, plan);
      });

  // At gamma = 1 the two Pfaffian sides coincide entry by entry.
  for (std::uint64_t seed : {931ULL, 941ULL, 951ULL}) {
    int n = seed == 931 ? 1 : seed == 941 ? 2 : 3;
    ParamShape shape = admissible_shape(2 * n, kTightEpsilon);
    shape.unit_gamma = true;
    ParamSet params = generate_params(seed, shape);
    if (class_rhs(params) != unref_rhs(params))
      out.fail("seed " + std::to_string(seed) +
               ": Pfaffian sides disagree at gamma = 1");
  }

  // ... while the expansions themselves differ termwise once s is generic.
  {
    ParamShape shape = admissible_shape(2, kTightEpsilon);
    shape.unit_gamma = true;
    ParamSet params = generate_params(931, shape);
    LatticeEvaluator eval(params);
    bool differs = false;
    for (int m = 0; m <= 2 && !differs; ++m)
      for (const Signature& lambda : even_shell(2, m)) {
        Rational spin_term = unref_coeff(lambda, params) * eval.value(lambda);
        Rational classical_term = class_coeff(lambda, params) *
                                  hl_polynomial(lambda, params.u, params.t);
        if (spin_term != classical_term) {
          differs = true;
          break;
        }
      }
    if (!differs) out.fail("expansions do not differ termwise at generic s");
  }

  // Per-signature normalization between the two left-hand sides at s == 0:
  // the classical coefficient is the refined one times prod_r (t;t)_{m_r}.
  {
    ParamShape shape = admissible_shape(4, kTightEpsilon);
    shape.s_mode = SMode::zero;
    ParamSet params = generate_params(911, shape);
    for (const Signature& lambda : enumerate_even(4, 4)) {
      Rational norm = 1;
      for (const auto& [value, count] : lambda.multiplicities())
        norm *= pochhammer_t(params.t, params.t, count);
      if (class_coeff(lambda, params) != littlewood_coeff(lambda, params) * norm) {
        out.fail("coefficient normalization fails at " + lambda.str());
        break;
      }
    }
  }
  if (out.ok) out.note("both specializations pass; sides agree at gamma = 1; "
                       "termwise difference and normalization verified");
  return out;
}

Outcome criterion_exactmath() {
  Outcome out;
  std::mt19937_64 rng(0xacce97ULL);
  auto small = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  auto rational_draw = [&]() {
    Rational out_value(small(-9, 9), small(1, 9));
    out_value.canonicalize();
    return out_value;
  };

  for (int trial = 0; trial < 100; ++trial) {
    int dim = 2 * static_cast<int>(1 + rng() % 4);
    SkewMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) m.set(i, j, rational_draw());
    Rational pf = pfaffian(m);
    if (pf * pf != determinant(m.dense())) {
      out.fail("pfaffian^2 != det at trial " + std::to_string(trial));
      break;
    }
  }

  for (int trial = 0; trial < 20 && out.ok; ++trial) {
    int degree = static_cast<int>(rng() % 7);
    std::vector<Rational> coeffs(degree + 1);
    for (Rational& c : coeffs) c = rational_draw();
    Poly original(coeffs);
    std::vector<std::pair<Rational, Rational>> points;
    for (int k = 0; k <= degree; ++k) {
      Rational x(2 * k + 1, static_cast<long>(trial) + 2);
      x.canonicalize();
      points.emplace_back(x, original(x));
    }
    Poly rebuilt = interpolate(points);
    Rational probe = rational_draw();
    if (!(rebuilt == original))
      out.fail("interpolation does not reproduce coefficients");
    else if (interpolate_at(points, probe) != original(probe))
      out.fail("pointwise interpolation disagrees with the polynomial");
  }

  for (int trial = 0; trial < 20 && out.ok; ++trial) {
    Rational a = rational_draw();
    Rational t = rational_draw();
    for (int k = 0; k <= 20; ++k)
      if (pochhammer_t(a, t, k + 1) !=
          Rational(pochhammer_t(a, t, k) * (1 - a * pow_int(t, k)))) {
        out.fail("Pochhammer recurrence fails");
        break;
      }
  }
  if (out.ok)
    out.note("100 Pfaffian/determinant checks, interpolation and Pochhammer "
             "recurrences exact");
  return out;
}

Outcome criterion_negative_controls() {
  Outcome out;

  // Control 1: one exponent bumped in one column-weight entry must break the
  // route agreement of criterion 1.
  {
    ParamSet params = generate_params(201, admissible_shape(3, Rational(1, 10)));
    ColumnWeightFn mutated = [](const Rational& u, const Rational& s,
                                const Rational& t, const Rational& gamma, int x,
                                int g, int j1, int g2, int j2) {
      if (j1 == 1 && j2 == 1 && g2 == g && g >= 0)
        return Rational((u - s * pow_int(t, g + 1)) / (1 - s * u));
      return default_column_weight(u, s, t, gamma, x, g, j1, g2, j2);
    };
    Report straight = check_lattice_vs_sym(params, 3, 4);
    Report broken = check_lattice_vs_sym(params, 3, 4, mutated);
    if (straight.verdict != Verdict::pass)
      out.fail("control 1 baseline does not pass");
    if (broken.verdict != Verdict::fail)
      out.fail("column-weight exponent mutation was not detected");
  }

  // Control 2: one exponent bumped in one cross-weight entry must break the
  // exchange relation of criterion 2.
  {
    ParamSet params = generate_params(301, loose_shape(2));
    CrossFn mutated = [](const Rational& z, const Rational& t, int i1, int j1,
                         int i2, int j2) {
      if (i1 == 0 && j1 == 1 && i2 == 0 && j2 == 1)
        return Rational((1 - t * t * z) / (1 - z));
      return weight_cross(z, t, i1, j1, i2, j2);
    };
    Report straight = check_ybe_rll(params, params.u[0], params.u[1], 4);
    Report broken = check_ybe_rll(params, params.u[0], params.u[1], 4, mutated);
    if (straight.verdict != Verdict::pass)
      out.fail("control 2 baseline does not pass");
    if (broken.verdict != Verdict::fail)
      out.fail("cross-weight exponent mutation was not detected");
  }

  // Control 3: flipping the sign of a single Pfaffian entry must break the
  // exact kernel and recursion comparisons of the property suite.
  {
    ParamSet params2 = generate_params(511, loose_shape(2));
    Rational straight2 = z2n_pfaffian_side(params2);
    Rational kernel = z2(params2, params2.u[0], params2.u[1]);
    SkewMatrix flipped2 = z2n_matrix(params2);
    flipped2.set(0, 1, Rational(-flipped2.at(0, 1)));
    Rational uij = params2.u[0] * params2.u[1];
    Rational prefactor2 =
        (1 - uij) * (1 - params2.t * uij) / (params2.u[0] - params2.u[1]);
    Rational broken2 = prefactor2 * pfaffian(flipped2);
    if (straight2 != kernel) out.fail("control 3 baseline kernel does not match");
    if (broken2 == kernel) out.fail("entry sign flip was not detected at n = 1");

    ParamSet params4 = generate_params(521, loose_shape(4));
    SkewMatrix flipped4 = z2n_matrix(params4);
    flipped4.set(0, 1, Rational(-flipped4.at(0, 1)));
    Rational prefactor4 = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rational prod = params4.u[i] * params4.u[j];
        prefactor4 *= (1 - prod) * (1 - params4.t * prod) /
                      (params4.u[i] - params4.u[j]);
      }
    if (prefactor4 * pfaffian(flipped4) == z2n_pfaffian_side(params4))
      out.fail("entry sign flip was not detected at n = 2");
  }

  if (out.ok)
    out.note("weight, cross, and Pfaffian-entry mutations all flip a passing "
             "comparison to fail");
  return out;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& observer) {
  struct Row {
    const char* name;
    double budget_ms;
    std::function<Outcome()> body;
  };
  const std::vector<Row> rows = {
      {"weight-table pinning: lattice route equals symmetrization route", 30000,
       criterion_weight_pinning},
      {"exchange relation (RLL) residual is exactly zero", 10000,
       criterion_exchange_relation},
      {"single-row closure balance and closure shapes", 10000,
       criterion_closure_balance},
      {"Pfaffian-side property suite (symmetry, degree, recursion, pinned "
       "specialization, kernel)",
       60000, criterion_z_properties},
      {"frozen specialization Pfaffian equals closed product", 30000,
       criterion_frozen},
      {"refined Littlewood identity truncation convergence", 600000,
       criterion_littlewood},
      {"Pfaffian partition identity and substitution audit", 300000, criterion_pfp},
      {"classical and unrefined specializations", 300000,
       criterion_specializations},
      {"exact linear algebra unit battery", 5000, criterion_exactmath},
      {"negative controls: seeded mutations are detected", 60000,
       criterion_negative_controls},
  };

  std::vector<CriterionResult> results;
  int index = 0;
  for (const Row& row : rows) {
    CriterionResult result;
    result.index = ++index;
    result.name = row.name;
    Stopwatch timer;
    Outcome outcome;
    try {
      outcome = row.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    result.runtime_ms = timer.elapsed_ms();
    result.pass = outcome.ok;
    result.detail = outcome.detail;
    if (result.runtime_ms > row.budget_ms) {
      result.pass = false;
      result.detail += (result.detail.empty() ? "" : "; ") + std::string(
          "runtime budget exceeded (") + fmt_double(row.budget_ms / 1000.0) + " s)";
    }
    if (observer) observer(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::string criterion_line(const CriterionResult& result) {
  std::ostringstream line;
  line << "criterion " << (result.index < 10 ? " " : "") << result.index << ": "
       << (result.pass ? "PASS" : "FAIL") << "  " << result.name;
  if (!result.detail.empty()) line << "  [" << result.detail << "]";
  line << "  (" << static_cast<long>(result.runtime_ms) << " ms)";
  return line.str();
}

}  // namespace shl
