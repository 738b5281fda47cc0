#pragma once

#include <vector>

#include "shl/rational.hpp"

namespace shl {

using Matrix = std::vector<std::vector<Rational>>;

/// Exact determinant of a square matrix via fraction-free (Bareiss)
/// elimination. The argument is taken by value and used as workspace.
Rational determinant(Matrix a);

/// Skew-symmetric matrix of even dimension 2n. Only the strict upper
/// triangle is stored; the diagonal is structurally zero and the lower
/// triangle is implied by antisymmetry.
class SkewMatrix {
 public:
  /// Throws std::invalid_argument unless dim is even and nonnegative.
  explicit SkewMatrix(int dim);

  int dim() const { return dim_; }

  /// Set A[i][j] = v (and implicitly A[j][i] = -v); 0-based, i != j.
  void set(int i, int j, const Rational& v);

  /// Signed entry lookup; zero on the diagonal.
  Rational at(int i, int j) const;

  Matrix dense() const;

 private:
  int dim_;
  std::vector<Rational> upper_;  // packed (i, j) with i < j, row-major
  std::size_t slot(int i, int j) const;
};

/// Pfaffian of a skew-symmetric matrix; 1 for dimension 0.
/// Dispatches to the recursive expansion for dim <= 8 and to skew
/// elimination beyond; the two routines agree on their overlap.
Rational pfaffian(const SkewMatrix& a);

/// Recursive first-row expansion Pf(A) = sum_j (-1)^j A[0][j] Pf(minor).
Rational pfaffian_expansion(const SkewMatrix& a);

/// Exact skew (congruence) elimination, pairing off rows two at a time.
Rational pfaffian_elimination(const SkewMatrix& a);

}  // namespace shl
