#include "shl/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace shl {

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return Rational(1);

  // Bareiss fraction-free elimination with row pivoting.
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det = a[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

SkewMatrix::SkewMatrix(int dim) : dim_(dim) {
  if (dim < 0 || dim % 2 != 0)
    throw std::invalid_argument("SkewMatrix: dimension must be even and nonnegative");
  upper_.assign(static_cast<std::size_t>(dim) * (dim > 0 ? dim - 1 : 0) / 2, Rational(0));
}

std::size_t SkewMatrix::slot(int i, int j) const {
  // Row-major packing of the strict upper triangle: row i starts at
  // i*dim - i*(i+1)/2 - i ... computed directly below.
  return static_cast<std::size_t>(i) * (2 * dim_ - i - 1) / 2 + (j - i - 1);
}

void SkewMatrix::set(int i, int j, const Rational& v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i == j)
    throw std::invalid_argument("SkewMatrix::set: bad index");
  if (i < j)
    upper_[slot(i, j)] = v;
  else
    upper_[slot(j, i)] = -v;
}

Rational SkewMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::invalid_argument("SkewMatrix::at: bad index");
  if (i == j) return Rational(0);
  if (i < j) return upper_[slot(i, j)];
  return -upper_[slot(j, i)];
}

Matrix SkewMatrix::dense() const {
  Matrix m(dim_, std::vector<Rational>(dim_, Rational(0)));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m[i][j] = at(i, j);
  return m;
}

namespace {

Rational pf_expand(const SkewMatrix& a, const std::vector<int>& idx) {
  const std::size_t m = idx.size();
  if (m == 0) return Rational(1);
  Rational total(0);
  int sign = 1;
  for (std::size_t j = 1; j < m; ++j) {
    Rational head = a.at(idx[0], idx[j]);
    if (head != 0) {
      std::vector<int> rest;
      rest.reserve(m - 2);
      for (std::size_t k = 1; k < m; ++k)
        if (k != j) rest.push_back(idx[k]);
      Rational term = head * pf_expand(a, rest);
      total += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

Rational pfaffian_expansion(const SkewMatrix& a) {
  std::vector<int> idx(a.dim());
  for (int i = 0; i < a.dim(); ++i) idx[i] = i;
  return pf_expand(a, idx);
}

Rational pfaffian_elimination(const SkewMatrix& a) {
  const int n = a.dim();
  if (n == 0) return Rational(1);
  Matrix m = a.dense();
  Rational result(1);
  int sign = 1;
  for (int p = 0; p + 1 < n; p += 2) {
    // Bring a nonzero pivot into position (p, p+1) by a simultaneous
    // row/column swap (a congruence, flipping the Pfaffian's sign).
    int k = -1;
    for (int c = p + 1; c < n; ++c)
      if (m[p][c] != 0) {
        k = c;
        break;
      }
    if (k < 0) return Rational(0);
    if (k != p + 1) {
      std::swap(m[k], m[p + 1]);
      for (int r = 0; r < n; ++r) std::swap(m[r][k], m[r][p + 1]);
      sign = -sign;
    }
    const Rational piv = m[p][p + 1];
    result *= piv;
    for (int r = p + 2; r < n; ++r) {
      // Zero out column entries m[p][r] and m[p+1][r] by congruence
      // updates, which leave the Pfaffian of the trailing block intact.
      if (m[p][r] != 0) {
        Rational f = m[p][r] / piv;
        for (int c = 0; c < n; ++c) m[r][c] -= f * m[p + 1][c];
        for (int rr = 0; rr < n; ++rr) m[rr][r] -= f * m[rr][p + 1];
      }
      if (m[p + 1][r] != 0) {
        Rational f = m[p + 1][r] / piv;
        for (int c = 0; c < n; ++c) m[r][c] += f * m[p][c];
        for (int rr = 0; rr < n; ++rr) m[rr][r] += f * m[rr][p];
      }
    }
  }
  return sign > 0 ? result : -result;
}

Rational pfaffian(const SkewMatrix& a) {
  if (a.dim() <= 8) return pfaffian_expansion(a);
  return pfaffian_elimination(a);
}

}  // namespace shl
