#pragma once

#include <optional>
#include <string>

#include "shl/matrix.hpp"
#include "shl/params.hpp"
#include "shl/report.hpp"
#include "shl/signature.hpp"

namespace shl {

enum class TruncationMode { fixed, adaptive };

/// Truncation control for the infinite signature sums: cutoff by largest
/// part M, target n (2n spectral variables), and the float-shadow tolerance
/// used by verdicts. Adaptive mode may stop before max_part once the
/// residual trace has settled (three consecutive shrinking steps below the
/// tolerance); fixed mode always runs through max_part.
struct TruncationPlan {
  int max_part = 16;
  int n = 1;
  TruncationMode mode = TruncationMode::fixed;
  Rational tolerance = Rational(1) / pow_int(Rational(10), 10);

  nlohmann::ordered_json echo() const;
};

/// First admissibility violation |(u_i - s_x)/(1 - s_x u_i)| > 1 - epsilon,
/// described for error messages; std::nullopt when params are admissible.
std::optional<std::string> admissibility_violation(const ParamSet& params);

/// Even signatures with num_parts parts whose largest part is exactly
/// max_part (the all-zero signature for max_part = 0).
std::vector<Signature> even_shell(int num_parts, int max_part);

/// Coefficient of F_lambda in the refined Littlewood sum:
///   1/(t;t)_{m_0} * prod_{j=1}^{m_0/2} (1 - s_0^2 gamma^{-1} t^{2j-2})(1 - gamma t^{2j-1})
///   * prod_{j=1}^{2n} (1 - s_0 u_j)
///   * prod_{i>=1} prod_{j=1}^{m_i/2} (1 - s_i^2 t^{2j-2})/(1 - t^{2j}).
Rational littlewood_coeff(const Signature& lambda, const ParamSet& params);

/// Partial sum of the refined Littlewood left-hand side over even signatures
/// with largest part <= plan.max_part.
Rational littlewood_lhs(const ParamSet& params, const TruncationPlan& plan);

/// Closed right-hand side: prod_{i<j} (1 - t u_i u_j)/(u_i - u_j) times the
/// Pfaffian with entries
///   (u_i - u_j) [(1-t)(1 - s_0 u_i)(1 - s_0 u_j)
///                + (1 - gamma)(t - s_0^2 gamma^{-1})(1 - u_i u_j)]
///   / ((1 - u_i u_j)(1 - t u_i u_j)).
Rational littlewood_rhs(const ParamSet& params);

/// Two-variable kernel (gamma attached to s_0):
///   (1-t)(1 - gamma s_0 x)(1 - gamma s_0 y) + (1 - gamma)(t - gamma s_0^2)(1 - x y).
Rational z2(const ParamSet& params, const Rational& x, const Rational& y);

/// Skew matrix of Pfaffian entries z2(u_i,u_j)(u_i-u_j)/((1-u_iu_j)(1-t u_iu_j)).
SkewMatrix z2n_matrix(const ParamSet& params);

/// The polynomial Z_{2n}: prod_{i<j} (1-u_iu_j)(1-t u_iu_j)/(u_i-u_j) times
/// the Pfaffian of z2n_matrix. Symmetric, degree 2n-1 in each variable.
Rational z2n_pfaffian_side(const ParamSet& params);

/// Pfaffian form of the even-multiplicity partition sum:
///   prod_j 1/(1 - s_0 u_j) * prod_{i<j} (1 - t u_iu_j)/(u_i - u_j) * Pf[z2n_matrix].
Rational pfp_rhs(const ParamSet& params);

/// Truncated even-signature sum of c_weight(lambda) * f_alpha(lambda)
/// (same convention as pfp_rhs).
Rational partition_P(const ParamSet& params, const TruncationPlan& plan);

/// Hall-Littlewood specialization (s == 0) coefficient:
///   prod_{j=1}^{m_0/2} (1 - gamma t^{2j-1}) * prod_{i>=1} prod_{j=1}^{m_i/2} (1 - t^{2j-1}).
Rational class_coeff(const Signature& lambda, const ParamSet& params);
Rational class_lhs(const ParamSet& params, const TruncationPlan& plan);
/// prod_{i<j} (1-t u_iu_j)/(u_i-u_j) * Pf[(u_i-u_j)(1 - gamma t + (gamma-1) t u_iu_j)
///                                        /((1-u_iu_j)(1-t u_iu_j))].
Rational class_rhs(const ParamSet& params);

/// Unrefined (gamma = 1) coefficient:
///   prod_{i>=0} prod_{j=1}^{m_i/2} (1 - s_i^2 t^{2j-2})/(1 - t^{2j}).
Rational unref_coeff(const Signature& lambda, const ParamSet& params);
Rational unref_lhs(const ParamSet& params, const TruncationPlan& plan);
/// prod_{i<j} (1-t u_iu_j)/(u_i-u_j) * Pf[(u_i-u_j)(1-t)/((1-u_iu_j)(1-t u_iu_j))].
Rational unref_rhs(const ParamSet& params);

/// Truncated comparison of littlewood_lhs against littlewood_rhs with a
/// residual trace; pass iff the relative float-shadow residual trace is
/// eventually decreasing and its final value meets plan.tolerance.
Report check_littlewood(const ParamSet& params, const TruncationPlan& plan);

/// Same contract for the s == 0 Hall-Littlewood identity (class_lhs/class_rhs).
Report check_class_specialization(const ParamSet& params, const TruncationPlan& plan);

/// Same contract for the gamma = 1 identity (unref_lhs/unref_rhs).
Report check_unrefined(const ParamSet& params, const TruncationPlan& plan);

/// Truncated comparison of partition_P against pfp_rhs; for n <= 2 it also
/// audits, per signature with parts <= 4, that the s_0 -> gamma s_0
/// substitution maps each partition_P term onto the corresponding refined
/// Littlewood term (times prod_j (1 - s_0 u_j)), exactly.
Report check_pfp(const ParamSet& params, const TruncationPlan& plan);

/// Z_{2n} property suite (exact, n <= 4): adjacent-swap symmetry, degree
/// 2n-1 in the last variable via interpolation, the two-variable reduction
/// at u_{2n} = 1/u_{2n-1}, the (t, 1/t^2, ...) specialization against the
/// pinned closed form, and the n = 1 kernel formula.
Report check_z_properties(const ParamSet& params, int n);

/// Frozen specialization u_j = t^{2n-j}/(gamma s_0): exact equality of the
/// specialized Pfaffian and the closed product
///   (-1)^n gamma^n t^{n^2}
///   * prod_{0<=i<j<=2n-1} (t^j - t^i)/(gamma s_0 - t^{i+j+1}/(gamma s_0))
///   * prod_{j=1}^n (1 - s_0^2 gamma t^{-2j+1})(1 - gamma^{-1} t^{2j-2}).
Report check_frozen_corollary(const ParamSet& params, int n);

/// Entry (i,j), 1-based, of the frozen specialized Pfaffian (the general
/// entry under u_i = t^{2n-i}/(gamma s_0), written over powers of t).
Rational frozen_entry(const ParamSet& params, int n, int i, int j);

/// The closed product on the frozen corollary's right-hand side.
Rational frozen_closed_product(const ParamSet& params, int n);

}  // namespace shl
