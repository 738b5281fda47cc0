#pragma once

#include <vector>

#include "shl/params.hpp"
#include "shl/signature.hpp"

namespace shl {

/// One evaluation instance: a signature together with matching parameters
/// (lambda must have exactly as many parts as params.u has entries).
struct EvalRequest {
  Signature lambda;
  ParamSet params;
};

/// F_lambda by direct symmetrization:
///   sum over permutations sigma in S_N of
///     prod_{i<j} (u_{sigma(i)} - t u_{sigma(j)})/(u_{sigma(i)} - u_{sigma(j)})
///     * prod_i (1-t)/(1 - s_{lambda_i} u_{sigma(i)})
///              * prod_{j=0}^{lambda_i - 1} (u_{sigma(i)} - s_j)/(1 - s_j u_{sigma(i)}).
/// Throws std::domain_error on coincident u values or a vanishing 1 - s_x u_i.
Rational f_symmetrization(const EvalRequest& req);
Rational f_symmetrization(const Signature& lambda, const ParamSet& params);

/// Refined evaluator:
///   (gamma t; t)_{m_0} / (t; t)_{m_0}
///   * prod_j (1 - gamma s_0 u_j)/(1 - s_0 u_j)
///   * F_lambda with s_0 replaced by gamma*s_0 (other columns unchanged).
/// Coincides with f_symmetrization at gamma = 1.
Rational f_alpha(const EvalRequest& req);
Rational f_alpha(const Signature& lambda, const ParamSet& params);

/// Classical Hall-Littlewood polynomial P_lambda(u; t): f_symmetrization at
/// s == 0 divided by prod_r (t; t)_{m_r(lambda)}.
Rational hl_polynomial(const Signature& lambda, const std::vector<Rational>& u,
                       const Rational& t);

}  // namespace shl
