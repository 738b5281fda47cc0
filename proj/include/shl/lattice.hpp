#pragma once

#include <functional>
#include <map>
#include <vector>

#include "shl/params.hpp"
#include "shl/signature.hpp"
#include "shl/weights.hpp"

namespace shl {

/// Column vertex weight used inside a row product: (u, s, t, gamma, column x,
/// g, j1, g2, j2) -> Rational. The default applies the gamma deformation at
/// column 0 only; gamma = 1 recovers the plain table everywhere.
using ColumnWeightFn = std::function<Rational(
    const Rational& u, const Rational& s, const Rational& t, const Rational& gamma,
    int x, int g, int j1, int g2, int j2)>;

/// Default column weight: weight_w0gamma at x = 0, weight_w elsewhere.
Rational default_column_weight(const Rational& u, const Rational& s, const Rational& t,
                               const Rational& gamma, int x, int g, int j1, int g2, int j2);

/// One-row transfer weight from occupation mu to nu with rapidity u:
/// product over columns x = 0..max part of weight(u, s(x), m_x(mu), h_x;
/// m_x(nu), h_{x+1}) where h_0 = 1 and h_{x+1} = h_x + m_x(mu) - m_x(nu).
/// Returns 0 whenever some h leaves {0,1} or the path fails to exit, which
/// covers every non-interlacing pair. gamma enters at column 0 only.
Rational row_weight(const ParamSet& params, const Rational& u,
                    const Signature& mu, const Signature& nu,
                    const Rational& gamma = 1,
                    const ColumnWeightFn& weight = default_column_weight);

/// Conjugated one-row weight from mu down to nu (nu has one part fewer):
/// prod_x conjugation_ratio(s_x, t, gamma at x = 0 else 1, m_x(mu), m_x(nu))
/// times row_weight(params, v, nu, mu, gamma).
Rational row_weight_star(const ParamSet& params, const Rational& v,
                         const Signature& mu, const Signature& nu,
                         const Rational& gamma = 1);

/// All mu with interlace_up(mu, nu): mu_k ranges over [nu_{k+1}, nu_k].
std::vector<Signature> interlacing_predecessors(const Signature& nu);

/// Partition-function evaluator for F_lambda over up-right path ensembles,
/// with memoization shared across calls (level k states always pair with
/// rapidity u_k, so caching by state alone is sound). An alternative column
/// weight can be injected for mutation tests.
class LatticeEvaluator {
 public:
  explicit LatticeEvaluator(ParamSet params,
                            ColumnWeightFn weight = default_column_weight,
                            Rational gamma_override = 1);

  /// F_lambda(u_1..u_N); lambda must have exactly params.u.size() parts.
  Rational value(const Signature& lambda);

  const ParamSet& params() const { return params_; }

 private:
  Rational partial(const Signature& nu);

  ParamSet params_;
  ColumnWeightFn weight_;
  Rational gamma_;
  std::map<std::vector<int>, Rational> memo_;
};

/// F_lambda as a lattice partition function (fresh evaluator per call).
Rational lattice_F(const Signature& lambda, const ParamSet& params);

/// Gamma-deformed variant: every column-0 weight comes from the deformed
/// table, with gamma taken from params.
Rational lattice_F_deformed(const Signature& lambda, const ParamSet& params);

}  // namespace shl
