#include "shl/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace shl {

InhomogeneitySequence::InhomogeneitySequence(std::vector<Rational> prefix, Rational tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

InhomogeneitySequence InhomogeneitySequence::constant(const Rational& value) {
  return InhomogeneitySequence({}, value);
}

const Rational& InhomogeneitySequence::at(int x) const {
  if (x < 0) throw std::invalid_argument("column index must be nonnegative");
  if (x < static_cast<int>(prefix_.size())) return prefix_[x];
  return tail_;
}

InhomogeneitySequence InhomogeneitySequence::with_s0(const Rational& s0) const {
  InhomogeneitySequence out = *this;
  if (out.prefix_.empty()) out.prefix_.push_back(out.tail_);
  out.prefix_[0] = s0;
  return out;
}

ParamSet ParamSet::with_s0(const Rational& s0) const {
  ParamSet out = *this;
  out.s = out.s.with_s0(s0);
  return out;
}

void ParamSet::validate_basic() const {
  if (t == 0 || t == 1) throw std::domain_error("t must differ from 0 and 1");
  if (gamma == 0) throw std::domain_error("gamma must be nonzero");
  std::vector<Rational> svals = s.prefix();
  svals.push_back(s.tail());
  for (const Rational& ui : u)
    for (const Rational& sx : svals)
      if (sx * ui == 1)
        throw std::domain_error("singular parameters: 1 - s_x*u_i vanishes");
}

void ParamSet::require_identity_regular() const {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] == u[j])
        throw std::domain_error("spectral variables must be pairwise distinct");
      if (u[i] * u[j] == 1)
        throw std::domain_error("singular parameters: u_i*u_j = 1");
      if (t * u[i] * u[j] == 1)
        throw std::domain_error("singular parameters: t*u_i*u_j = 1");
    }
}

bool contraction_within(const Rational& u, const Rational& s, const Rational& epsilon) {
  Rational margin = 1 - epsilon;
  if (margin < 0) return false;
  Rational lhs = abs(Rational(u - s));
  Rational rhs = margin * abs(Rational(1 - s * u));
  return lhs <= rhs;
}

bool is_admissible(const ParamSet& params) {
  std::vector<Rational> svals = params.s.prefix();
  svals.push_back(params.s.tail());
  for (const Rational& ui : params.u)
    for (const Rational& sx : svals)
      if (!contraction_within(ui, sx, params.epsilon)) return false;
  return true;
}

double contraction_ratio(const ParamSet& params) {
  std::vector<Rational> svals = params.s.prefix();
  svals.push_back(params.s.tail());
  double worst = 0.0;
  for (const Rational& ui : params.u)
    for (const Rational& sx : svals) {
      Rational den = 1 - sx * ui;
      if (den == 0) return 1.0;
      double ratio = std::abs(shadow(ui - sx) / shadow(den));
      worst = std::max(worst, ratio);
    }
  return worst;
}

}  // namespace shl
