#pragma once

#include <vector>

#include "shl/params.hpp"
#include "shl/signature.hpp"

namespace shl {

/// Occupancy state by column: column 0 carries a signed multiplicity m0,
/// columns i >= 1 carry nonnegative multiplicities (finitely many nonzero).
class GeneralizedState {
 public:
  GeneralizedState() = default;
  /// State of a plain signature: m0 = mult(0), mult(i) copied for i >= 1.
  explicit GeneralizedState(const Signature& lambda);

  int m0() const { return m0_; }
  void set_m0(int value) { m0_ = value; }

  /// Multiplicity at column i >= 1.
  int mult(int i) const;
  /// Throws std::invalid_argument for i < 1 or count < 0.
  void set_mult(int i, int count);

  /// Largest column i >= 1 with mult(i) > 0, or 0 when there is none.
  int max_index() const;

 private:
  int m0_ = 0;
  std::vector<int> higher_;  // higher_[i-1] = mult(i)
};

/// Coefficient of the state in the weighted even-multiplicity vector:
///   prod_{i>=1} prod_{j=1}^{m_i/2} (1 - s_i^2 t^{2j-2})/(1 - t^{2j})
/// times the column-0 branch
///   m0 >= 0: prod_{j=1}^{m0/2}  (1 - s_0^2 gamma t^{2j-2})/(1 - gamma t^{2j})
///   m0 <= 0: prod_{j=1}^{-m0/2} (1 - gamma t^{-2j+2})/(1 - s_0^2 gamma t^{-2j}).
/// Throws std::invalid_argument on any odd multiplicity and std::domain_error
/// (naming the factor) on a vanishing denominator.
Rational c_weight(const GeneralizedState& state, const ParamSet& params);

/// c_weight of a plain signature.
Rational c_weight(const Signature& lambda, const ParamSet& params);

}  // namespace shl
