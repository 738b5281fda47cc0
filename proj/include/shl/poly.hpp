#pragma once

#include <utility>
#include <vector>

#include "shl/rational.hpp"

namespace shl {

/// Dense univariate polynomial over Rational, lowest-degree coefficient
/// first. The zero polynomial has an empty coefficient list; otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k (zero beyond the stored degree).
  Rational coeff(int k) const;

  Rational operator()(const Rational& x) const;

  bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < #points through all given points
/// (Newton's divided differences, exact). Throws std::invalid_argument on a
/// repeated abscissa.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// Exact value at `x` of the interpolating polynomial through `points`,
/// without materializing coefficients (direct Lagrange evaluation).
Rational interpolate_at(const std::vector<std::pair<Rational, Rational>>& points,
                        const Rational& x);

}  // namespace shl
