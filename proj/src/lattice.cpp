#include "shl/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace shl {

Rational default_column_weight(const Rational& u, const Rational& s, const Rational& t,
                               const Rational& gamma, int x, int g, int j1, int g2, int j2) {
  if (x == 0) return weight_w0gamma(u, s, t, gamma, g, j1, g2, j2);
  return weight_w(u, s, t, g, j1, g2, j2);
}

Rational row_weight(const ParamSet& params, const Rational& u,
                    const Signature& mu, const Signature& nu,
                    const Rational& gamma, const ColumnWeightFn& weight) {
  int limit = std::max(mu.max_part(), nu.max_part());
  int h = 1;
  Rational out = 1;
  for (int x = 0; x <= limit; ++x) {
    int gm = mu.mult(x);
    int gn = nu.mult(x);
    int h_next = h + gm - gn;
    if (h_next < 0 || h_next > 1) return 0;
    out *= weight(u, params.s_at(x), params.t, gamma, x, gm, h, gn, h_next);
    if (out == 0) return 0;
    h = h_next;
  }
  return h == 0 ? out : Rational(0);
}

Rational row_weight_star(const ParamSet& params, const Rational& v,
                         const Signature& mu, const Signature& nu,
                         const Rational& gamma) {
  int limit = std::max(mu.max_part(), nu.max_part());
  Rational ratio = 1;
  for (int x = 0; x <= limit; ++x)
    ratio *= conjugation_ratio(params.s_at(x), params.t, x == 0 ? gamma : Rational(1),
                               mu.mult(x), nu.mult(x));
  return ratio * row_weight(params, v, nu, mu, gamma);
}

namespace {

void gather_predecessors(const Signature& nu, int i, std::vector<int>& mu,
                         std::vector<Signature>& out) {
  if (i == nu.size() - 1) {
    out.push_back(Signature(mu));
    return;
  }
  for (int part = nu[i]; part >= nu[i + 1]; --part) {
    mu.push_back(part);
    gather_predecessors(nu, i + 1, mu, out);
    mu.pop_back();
  }
}

}  // namespace

std::vector<Signature> interlacing_predecessors(const Signature& nu) {
  std::vector<Signature> out;
  if (nu.empty()) return out;
  std::vector<int> mu;
  mu.reserve(nu.size() - 1);
  gather_predecessors(nu, 0, mu, out);
  return out;
}

LatticeEvaluator::LatticeEvaluator(ParamSet params, ColumnWeightFn weight,
                                   Rational gamma_override)
    : params_(std::move(params)),
      weight_(std::move(weight)),
      gamma_(std::move(gamma_override)) {
  params_.validate_basic();
}

Rational LatticeEvaluator::value(const Signature& lambda) {
  if (lambda.size() != params_.num_vars())
    throw std::invalid_argument("lattice_F needs as many parts as rapidities");
  return partial(lambda);
}

Rational LatticeEvaluator::partial(const Signature& nu) {
  if (nu.empty()) return 1;
  auto it = memo_.find(nu.parts());
  if (it != memo_.end()) return it->second;
  const Rational& u = params_.u[nu.size() - 1];
  Rational total = 0;
  for (const Signature& mu : interlacing_predecessors(nu))
    total += partial(mu) * row_weight(params_, u, mu, nu, gamma_, weight_);
  memo_.emplace(nu.parts(), total);
  return memo_.at(nu.parts());
}

Rational lattice_F(const Signature& lambda, const ParamSet& params) {
  LatticeEvaluator evaluator(params);
  return evaluator.value(lambda);
}

Rational lattice_F_deformed(const Signature& lambda, const ParamSet& params) {
  LatticeEvaluator evaluator(params, default_column_weight, params.gamma);
  return evaluator.value(lambda);
}

}  // namespace shl
