#pragma once

#include <functional>

#include "shl/lattice.hpp"
#include "shl/params.hpp"
#include "shl/report.hpp"
#include "shl/signature.hpp"

namespace shl {

/// Cross-weight table signature, injectable for mutation tests.
using CrossFn = std::function<Rational(const Rational& z, const Rational& t,
                                       int i1, int j1, int i2, int j2)>;

/// Exchange-relation check between one w row vertex and one conjugated
/// w* row vertex intertwined by the cross weight at z = u*v:
///   sum_{k1,k2,k3} R_{uv}(i2,i1;k2,k1) w*_{v,s}(i3,k1;k3,j1) w_{u,s}(k3,k2;j3,j2)
/// = sum_{k1,k2,k3} w*_{v,s}(k3,i1;j3,k1) w_{u,s}(i3,i2;k3,k2) R_{uv}(k2,k1;j2,j1)
/// for all boundary indices i1,i2,j1,j2 in {0,1} and occupancies i3 <= cutoff
/// (j3 forced by conservation), at every column value of params.s.
/// The report's residual is the maximum |lhs - rhs| over tuples; the verdict
/// is pass only when that residual is exactly 0.
Report check_ybe_rll(const ParamSet& params, const Rational& u, const Rational& v,
                     int cutoff);

/// Same check with a replacement cross table.
Report check_ybe_rll(const ParamSet& params, const Rational& u, const Rational& v,
                     int cutoff, const CrossFn& cross);

/// Single-row even-closure balance at the gamma-deformed column-0 table:
///   c_weight(mu_plus) * row_weight(u, mu, mu_plus)
/// = c_weight(mu_minus) * row_weight_star(u, mu, mu_minus)
/// with u = params.u[0] and gamma from params. Signatures with an even part
/// count have no closures and report an unsupported verdict.
Report check_lemma_plus(const Signature& mu, const ParamSet& params);

/// Route agreement sweep: for every variable count N <= max_parts (using the
/// first N entries of params.u) and every signature with N parts and largest
/// part <= max_part, the lattice evaluation must equal the symmetrization
/// formula exactly. The residual is the maximum |difference| over the sweep.
Report check_lattice_vs_sym(const ParamSet& params, int max_parts, int max_part);

/// Same sweep with a replacement column weight on the lattice side.
Report check_lattice_vs_sym(const ParamSet& params, int max_parts, int max_part,
                            const ColumnWeightFn& weight);

/// Dual-route evaluation of a single function value: lhs is the lattice
/// route, rhs the symmetrization route, verdict pass iff they agree exactly.
Report eval_f(const Signature& lambda, const ParamSet& params);

/// Evaluation of the Pfaffian side of the refined identity at the given
/// parameters (prefactor included); lhs and rhs both carry the value.
Report eval_pf(const ParamSet& params);

}  // namespace shl
