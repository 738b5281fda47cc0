#include "shl/poly.hpp"

#include <stdexcept>

namespace shl {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate: repeated abscissa " +
                                    rational_str(points[i].first));
  if (n == 0) return Poly();

  // Newton divided differences.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  std::vector<Rational> newton(n);  // dd[0], dd[0,1], dd[0,1,2], ...
  newton[0] = dd[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i)
      dd[i] = (dd[i + 1] - dd[i]) / (points[i + level].first - points[i].first);
    newton[level] = dd[0];
  }

  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // prod (x - x_i), monomial form
  for (std::size_t level = 0; level < n; ++level) {
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += newton[level] * basis[k];
    if (level + 1 < n) {
      // basis *= (x - x_level)
      basis.push_back(Rational(0));
      for (std::size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - points[level].first * basis[k];
      basis[0] = -points[level].first * basis[0];
    }
  }
  return Poly(std::move(coeffs));
}

Rational interpolate_at(const std::vector<std::pair<Rational, Rational>>& points,
                        const Rational& x) {
  const std::size_t n = points.size();
  Rational total(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational term = points[i].second;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate_at: repeated abscissa");
      term *= (x - points[j].first) / (points[i].first - points[j].first);
    }
    total += term;
  }
  return total;
}

}  // namespace shl
