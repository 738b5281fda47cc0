#include "shl/symmetrization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shl {

Rational f_symmetrization(const Signature& lambda, const ParamSet& params) {
  const int n = lambda.size();
  if (n != params.num_vars())
    throw std::invalid_argument("f_symmetrization needs as many parts as variables");
  if (n == 0) return 1;
  const Rational& t = params.t;
  const std::vector<Rational>& u = params.u;

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u[a] == u[b])
        throw std::domain_error("f_symmetrization needs pairwise distinct u");

  // column_factor[v][k]: the lambda-part factor for part value k and variable
  // u_v, built from a running product over columns j < k.
  const int top = lambda.max_part();
  std::vector<std::vector<Rational>> column_factor(n, std::vector<Rational>(top + 1));
  for (int v = 0; v < n; ++v) {
    Rational running = 1;
    for (int k = 0; k <= top; ++k) {
      Rational den = 1 - params.s_at(k) * u[v];
      if (den == 0) throw std::domain_error("singular parameters: 1 - s_x*u_i vanishes");
      column_factor[v][k] = (1 - t) / den * running;
      running *= (u[v] - params.s_at(k)) / den;
    }
  }

  // cross[a][b] = (u_a - t u_b)/(u_a - u_b) for a != b.
  std::vector<std::vector<Rational>> cross(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) cross[a][b] = (u[a] - t * u[b]) / (u[a] - u[b]);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (int i = 0; i < n; ++i) {
      term *= column_factor[perm[i]][lambda[i]];
      for (int j = i + 1; j < n; ++j) term *= cross[perm[i]][perm[j]];
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational f_symmetrization(const EvalRequest& req) {
  return f_symmetrization(req.lambda, req.params);
}

Rational f_alpha(const Signature& lambda, const ParamSet& params) {
  if (params.gamma == 0) throw std::domain_error("f_alpha needs gamma != 0");
  const Rational& t = params.t;
  const Rational& gamma = params.gamma;
  const Rational& s0 = params.s_at(0);
  const int m0 = lambda.mult(0);

  Rational den_poch = pochhammer_t(t, t, m0);
  if (den_poch == 0) throw std::domain_error("f_alpha: (t;t)_{m0} vanishes");
  Rational out = pochhammer_t(gamma * t, t, m0) / den_poch;
  for (const Rational& uj : params.u) {
    Rational den = 1 - s0 * uj;
    if (den == 0) throw std::domain_error("singular parameters: 1 - s_0*u_j vanishes");
    out *= (1 - gamma * s0 * uj) / den;
  }
  return out * f_symmetrization(lambda, params.with_s0(gamma * s0));
}

Rational f_alpha(const EvalRequest& req) { return f_alpha(req.lambda, req.params); }

Rational hl_polynomial(const Signature& lambda, const std::vector<Rational>& u,
                       const Rational& t) {
  ParamSet params;
  params.t = t;
  params.s = InhomogeneitySequence::constant(0);
  params.u = u;
  Rational norm = 1;
  for (const auto& [value, count] : lambda.multiplicities())
    norm *= pochhammer_t(t, t, count);
  if (norm == 0) throw std::domain_error("hl_polynomial: vanishing (t;t) normalization");
  return f_symmetrization(lambda, params) / norm;
}

}  // namespace shl
