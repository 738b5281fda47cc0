#include "shl/checks.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "shl/cweight.hpp"
#include "shl/identities.hpp"
#include "shl/lattice.hpp"
#include "shl/symmetrization.hpp"
#include "shl/weights.hpp"

namespace shl {

Report check_ybe_rll(const ParamSet& params, const Rational& u, const Rational& v,
                     int cutoff) {
  return check_ybe_rll(params, u, v, cutoff,
                       [](const Rational& z, const Rational& t, int i1, int j1, int i2,
                          int j2) { return weight_cross(z, t, i1, j1, i2, j2); });
}

Report check_ybe_rll(const ParamSet& params, const Rational& u, const Rational& v,
                     int cutoff, const CrossFn& cross) {
  Report report;
  report.suite = "ybe";
  report.params = params_echo(params);
  report.params["u_row"] = rational_str(u);
  report.params["v_row"] = rational_str(v);
  report.params["cutoff"] = cutoff;
  Stopwatch timer;

  Rational z = u * v;
  Rational worst = 0;
  std::string worst_tuple;
  try {
    if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
    int num_columns = static_cast<int>(params.s.prefix().size()) + 1;
    for (int x = 0; x < num_columns; ++x) {
      const Rational& s = params.s.at(x);
      for (int i1 = 0; i1 <= 1; ++i1)
        for (int i2 = 0; i2 <= 1; ++i2)
          for (int j1 = 0; j1 <= 1; ++j1)
            for (int j2 = 0; j2 <= 1; ++j2)
              for (int i3 = 0; i3 <= cutoff; ++i3) {
                int j3 = i1 + i2 + i3 - j1 - j2;
                if (j3 < 0) continue;  // both sides vanish by conservation
                Rational lhs = 0;
                Rational rhs = 0;
                for (int k1 = 0; k1 <= 1; ++k1)
                  for (int k2 = 0; k2 <= 1; ++k2)
                    for (int k3 = 0; k3 <= cutoff + 2; ++k3) {
                      lhs += cross(z, params.t, i2, i1, k2, k1) *
                             weight_wstar(v, s, params.t, i3, k1, k3, j1) *
                             weight_w(u, s, params.t, k3, k2, j3, j2);
                      rhs += weight_wstar(v, s, params.t, k3, i1, j3, k1) *
                             weight_w(u, s, params.t, i3, i2, k3, k2) *
                             cross(z, params.t, k2, k1, j2, j1);
                    }
                Rational residual = abs(Rational(lhs - rhs));
                if (residual > worst) {
                  worst = residual;
                  worst_tuple = "(i1,i2,i3,j1,j2,j3,x)=(" + std::to_string(i1) + "," +
                                std::to_string(i2) + "," + std::to_string(i3) + "," +
                                std::to_string(j1) + "," + std::to_string(j2) + "," +
                                std::to_string(j3) + "," + std::to_string(x) + ")";
                }
              }
    }
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
    report.runtime_ms = timer.elapsed_ms();
    return report;
  }

  report.residual = rational_str(worst);
  report.verdict = worst == 0 ? Verdict::pass : Verdict::fail;
  if (report.verdict == Verdict::fail)
    report.message = "first largest residual at " + worst_tuple;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

Report check_lemma_plus(const Signature& mu, const ParamSet& params) {
  Report report;
  report.suite = "lemma-plus";
  report.params = params_echo(params);
  report.params["mu"] = mu.str();
  Stopwatch timer;

  if (mu.size() % 2 == 0) {
    report.verdict = Verdict::unsupported;
    report.message =
        "unsupported scope: closures exist only for an odd part count "
        "(even part counts would need the signed column-0 extension)";
    report.runtime_ms = timer.elapsed_ms();
    return report;
  }

  try {
    if (params.u.empty())
      throw std::invalid_argument("check_lemma_plus needs a row rapidity in params.u");
    const Rational& u = params.u.front();
    Signature up = *even_closure_up(mu);
    Signature down = *even_closure_down(mu);
    report.params["mu_plus"] = up.str();
    report.params["mu_minus"] = down.str();

    Rational lhs = c_weight(up, params) * row_weight(params, u, mu, up, params.gamma);
    Rational rhs =
        c_weight(down, params) * row_weight_star(params, u, mu, down, params.gamma);
    report.set_sides(lhs, rhs);
    report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

Report check_lattice_vs_sym(const ParamSet& params, int max_parts, int max_part) {
  return check_lattice_vs_sym(params, max_parts, max_part, default_column_weight);
}

Report check_lattice_vs_sym(const ParamSet& params, int max_parts, int max_part,
                            const ColumnWeightFn& weight) {
  Report report;
  report.suite = "lattice-vs-sym";
  report.params = params_echo(params);
  report.params["max_parts"] = max_parts;
  report.params["max_part"] = max_part;
  Stopwatch timer;

  try {
    if (max_parts < 0 || max_part < 0)
      throw std::invalid_argument("sweep bounds must be nonnegative");
    if ((int)params.u.size() < max_parts)
      throw std::invalid_argument("sweep needs at least max_parts spectral variables");
    params.validate_basic();

    Rational worst = 0;
    int mismatches = 0;
    long checked = 0;
    std::string first_bad;
    for (int n = 0; n <= max_parts; ++n) {
      ParamSet sliced = params;
      sliced.u.assign(params.u.begin(), params.u.begin() + n);
      LatticeEvaluator eval(sliced, weight);
      for (const Signature& lambda : enumerate_bounded(n, max_part)) {
        Rational via_lattice = eval.value(lambda);
        Rational via_sym = f_symmetrization(lambda, sliced);
        Rational residual = abs(Rational(via_lattice - via_sym));
        ++checked;
        if (residual != 0) {
          ++mismatches;
          if (first_bad.empty()) first_bad = lambda.str();
          worst = std::max(worst, residual);
        }
      }
    }
    report.residual = rational_str(worst);
    report.verdict = mismatches == 0 ? Verdict::pass : Verdict::fail;
    report.message = mismatches == 0
                         ? std::to_string(checked) + " signatures agree exactly"
                         : std::to_string(mismatches) + " of " +
                               std::to_string(checked) +
                               " signatures disagree, first at " + first_bad;
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

Report eval_f(const Signature& lambda, const ParamSet& params) {
  Report report;
  report.suite = "eval-f";
  report.params = params_echo(params);
  report.params["lambda"] = lambda.str();
  Stopwatch timer;
  try {
    if (lambda.size() != (int)params.u.size())
      throw std::invalid_argument(
          "eval-f needs as many spectral variables as lambda has parts");
    params.validate_basic();
    Rational via_lattice = lattice_F(lambda, params);
    Rational via_sym = f_symmetrization(lambda, params);
    report.set_sides(via_lattice, via_sym);
    report.verdict = via_lattice == via_sym ? Verdict::pass : Verdict::fail;
    if (report.verdict == Verdict::fail)
      report.message = "lattice and symmetrization routes disagree";
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

Report eval_pf(const ParamSet& params) {
  Report report;
  report.suite = "eval-pf";
  report.params = params_echo(params);
  Stopwatch timer;
  try {
    params.validate_basic();
    if (params.u.size() % 2 != 0)
      throw std::invalid_argument("eval-pf needs an even number of spectral variables");
    Rational value = littlewood_rhs(params);
    report.set_sides(value, value);
    report.verdict = Verdict::pass;
  } catch (const std::exception& e) {
    report.verdict = Verdict::error;
    report.message = e.what();
  }
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

}  // namespace shl
