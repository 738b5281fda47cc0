#include "shl/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace shl {

namespace {

void check_indices(int g, int j1, int g2, int j2) {
  if (g < 0 || g2 < 0) throw std::invalid_argument("occupancy must be nonnegative");
  if ((j1 & ~1) || (j2 & ~1))
    throw std::invalid_argument("horizontal index must be 0 or 1");
}

Rational checked_denominator(const Rational& s, const Rational& u) {
  Rational den = 1 - s * u;
  if (den == 0) throw std::domain_error("singular vertex weight: 1 - s*u = 0");
  return den;
}

}  // namespace

Rational conjugation_ratio(const Rational& s, const Rational& t, const Rational& gamma,
                           int i1, int i2) {
  Rational out = 1;
  Rational s2 = s * s;
  for (int k = std::min(i1, i2); k < std::max(i1, i2); ++k) {
    Rational num = 1 - s2 * gamma * pow_int(t, k);
    Rational den = 1 - gamma * pow_int(t, k + 1);
    if (i1 < i2) std::swap(num, den);
    if (den == 0) throw std::domain_error("singular conjugation ratio");
    out *= num / den;
  }
  return out;
}

Rational weight_w(const Rational& u, const Rational& s, const Rational& t,
                  int g, int j1, int g2, int j2) {
  return weight_w0gamma(u, s, t, 1, g, j1, g2, j2);
}

Rational weight_w0gamma(const Rational& u, const Rational& s, const Rational& t,
                        const Rational& gamma, int g, int j1, int g2, int j2) {
  check_indices(g, j1, g2, j2);
  if (g + j1 != g2 + j2) return 0;
  Rational den = checked_denominator(s, u);
  if (j1 == 0 && j2 == 0) return (1 - s * u * gamma * pow_int(t, g)) / den;
  if (j1 == 1 && j2 == 1) return (u - s * gamma * pow_int(t, g)) / den;
  if (j1 == 1 && j2 == 0) return (1 - gamma * pow_int(t, g + 1)) / den;
  // j1 == 0, j2 == 1, so g2 == g - 1 with g >= 1 by conservation
  return u * (1 - s * s * gamma * pow_int(t, g - 1)) / den;
}

Rational weight_wstar(const Rational& v, const Rational& s, const Rational& t,
                      int g, int j1, int g2, int j2) {
  return weight_wstar0gamma(v, s, t, 1, g, j1, g2, j2);
}

Rational weight_wstar0gamma(const Rational& v, const Rational& s, const Rational& t,
                            const Rational& gamma, int g, int j1, int g2, int j2) {
  check_indices(g, j1, g2, j2);
  if (g + j2 != g2 + j1) return 0;  // conservation of the conjugated pattern
  Rational ratio = conjugation_ratio(s, t, gamma, g, g2);
  return ratio * weight_w0gamma(v, s, t, gamma, g2, j1, g, j2);
}

Rational weight_cross(const Rational& z, const Rational& t,
                      int i1, int j1, int i2, int j2) {
  if ((i1 & ~1) || (j1 & ~1) || (i2 & ~1) || (j2 & ~1))
    throw std::invalid_argument("cross indices must be 0 or 1");
  if (z == 1) throw std::domain_error("cross weight pole at z = 1");
  if (i1 - j1 != i2 - j2) return 0;
  Rational den = 1 - z;
  if (i1 == j1 && i2 == j2) {
    if (i1 == 0 && i2 == 0) return 1;
    if (i1 == 1 && i2 == 1) return t;
    if (i1 == 0 && i2 == 1) return (1 - t) * z / den;
    return (1 - t) / den;  // (1,1;0,0)
  }
  // pass-through configurations (0,1;0,1) and (1,0;1,0)
  return (1 - t * z) / den;
}

Rational weight_w(const ParamSet& params, const Rational& u, int x,
                  int g, int j1, int g2, int j2) {
  return weight_w(u, params.s_at(x), params.t, g, j1, g2, j2);
}

Rational weight_wstar(const ParamSet& params, const Rational& v, int x,
                      int g, int j1, int g2, int j2) {
  return weight_wstar(v, params.s_at(x), params.t, g, j1, g2, j2);
}

Rational weight_w0gamma(const ParamSet& params, const Rational& u,
                        int g, int j1, int g2, int j2) {
  return weight_w0gamma(u, params.s_at(0), params.t, params.gamma, g, j1, g2, j2);
}

Rational weight_cross(const ParamSet& params, const Rational& z,
                      int i1, int j1, int i2, int j2) {
  return weight_cross(z, params.t, i1, j1, i2, j2);
}

}  // namespace shl
