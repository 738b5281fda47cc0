#pragma once

#include <vector>

#include "shl/rational.hpp"

namespace shl {

/// Column inhomogeneities s_0, s_1, ...: an explicit prefix followed by a
/// constant tail value reused for every later column, so s(x) is total.
class InhomogeneitySequence {
 public:
  InhomogeneitySequence() : tail_(0) {}
  InhomogeneitySequence(std::vector<Rational> prefix, Rational tail);

  /// All columns share one value.
  static InhomogeneitySequence constant(const Rational& value);

  /// s(x) for any x >= 0; throws std::invalid_argument for negative x.
  const Rational& at(int x) const;

  const std::vector<Rational>& prefix() const { return prefix_; }
  const Rational& tail() const { return tail_; }

  /// Copy with s(0) replaced (prefix is materialized if empty).
  InhomogeneitySequence with_s0(const Rational& s0) const;

 private:
  std::vector<Rational> prefix_;
  Rational tail_;
};

/// Model parameters shared by all evaluations and checks.
struct ParamSet {
  Rational t;
  Rational gamma{1};
  InhomogeneitySequence s;
  std::vector<Rational> u;
  Rational epsilon{1, 10};

  const Rational& s_at(int x) const { return s.at(x); }
  int num_vars() const { return static_cast<int>(u.size()); }

  /// Copy with s(0) replaced.
  ParamSet with_s0(const Rational& s0) const;

  /// Throws std::domain_error unless t is not 0 or 1, gamma != 0, and
  /// 1 - s(x)*u_i != 0 for every variable and every prefix/tail value.
  void validate_basic() const;

  /// Throws std::domain_error unless the u_i are pairwise distinct with
  /// u_i*u_j != 1 and t*u_i*u_j != 1 for i != j.
  void require_identity_regular() const;
};

/// True iff |u - s| <= (1 - epsilon)*|1 - s*u| (exact rational comparison).
bool contraction_within(const Rational& u, const Rational& s, const Rational& epsilon);

/// True iff every variable satisfies contraction_within against every prefix
/// value and the tail of params.s.
bool is_admissible(const ParamSet& params);

/// max over variables and columns of |(u - s)/(1 - s*u)|, as a shadow double;
/// the square of this ratio bounds the tail decay of one-part-deeper shells.
double contraction_ratio(const ParamSet& params);

}  // namespace shl
