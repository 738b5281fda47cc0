#include "shl/cweight.hpp"

#include <stdexcept>
#include <string>

namespace shl {

GeneralizedState::GeneralizedState(const Signature& lambda) {
  m0_ = lambda.mult(0);
  if (!lambda.empty()) higher_.assign(lambda.max_part(), 0);
  for (const auto& [value, count] : lambda.multiplicities())
    if (value >= 1) higher_[value - 1] = count;
}

int GeneralizedState::mult(int i) const {
  if (i < 1) throw std::invalid_argument("GeneralizedState::mult needs i >= 1");
  if (i > static_cast<int>(higher_.size())) return 0;
  return higher_[i - 1];
}

void GeneralizedState::set_mult(int i, int count) {
  if (i < 1) throw std::invalid_argument("GeneralizedState::set_mult needs i >= 1");
  if (count < 0) throw std::invalid_argument("multiplicity must be nonnegative");
  if (i > static_cast<int>(higher_.size())) higher_.resize(i, 0);
  higher_[i - 1] = count;
}

int GeneralizedState::max_index() const {
  for (int i = static_cast<int>(higher_.size()); i >= 1; --i)
    if (higher_[i - 1] > 0) return i;
  return 0;
}

namespace {

Rational checked_ratio(const Rational& num, const Rational& den, const std::string& factor) {
  if (den == 0) throw std::domain_error("c_weight: denominator factor " + factor + " vanishes");
  return num / den;
}

}  // namespace

Rational c_weight(const GeneralizedState& state, const ParamSet& params) {
  if (params.gamma == 0) throw std::domain_error("c_weight needs gamma != 0");
  const Rational& t = params.t;
  Rational total = 1;

  for (int i = 1; i <= state.max_index(); ++i) {
    int m = state.mult(i);
    if (m == 0) continue;
    if (m % 2 != 0)
      throw std::invalid_argument("c_weight: odd multiplicity at column " + std::to_string(i));
    Rational s2 = params.s_at(i) * params.s_at(i);
    for (int j = 1; j <= m / 2; ++j)
      total *= checked_ratio(1 - s2 * pow_int(t, 2 * j - 2), 1 - pow_int(t, 2 * j),
                             "1 - t^" + std::to_string(2 * j));
  }

  int m0 = state.m0();
  if (m0 % 2 != 0) throw std::invalid_argument("c_weight: odd multiplicity at column 0");
  Rational s0sq = params.s_at(0) * params.s_at(0);
  if (m0 >= 0) {
    for (int j = 1; j <= m0 / 2; ++j)
      total *= checked_ratio(1 - s0sq * params.gamma * pow_int(t, 2 * j - 2),
                             1 - params.gamma * pow_int(t, 2 * j),
                             "1 - gamma*t^" + std::to_string(2 * j));
  } else {
    for (int j = 1; j <= -m0 / 2; ++j)
      total *= checked_ratio(1 - params.gamma * pow_int(t, -2 * j + 2),
                             1 - s0sq * params.gamma * pow_int(t, -2 * j),
                             "1 - s0^2*gamma*t^" + std::to_string(-2 * j));
  }
  return total;
}

Rational c_weight(const Signature& lambda, const ParamSet& params) {
  return c_weight(GeneralizedState(lambda), params);
}

}  // namespace shl
