#pragma once

#include "shl/params.hpp"
#include "shl/rational.hpp"

namespace shl {

/// Row-transfer vertex weight w_{u,s}(g, j1; g2, j2) with occupancy g >= 0 and
/// horizontal indices j1, j2 in {0,1}:
///   (g,0; g,0)   -> (1 - s u t^g)/(1 - s u)
///   (g,1; g,1)   -> (u - s t^g)/(1 - s u)
///   (g,1; g+1,0) -> (1 - t^{g+1})/(1 - s u)
///   (g,0; g-1,1) -> u (1 - s^2 t^{g-1})/(1 - s u)
/// and 0 for every other index pattern (in particular whenever the
/// conservation law g + j1 = g2 + j2 fails).
/// Throws std::domain_error when 1 - s u = 0.
Rational weight_w(const Rational& u, const Rational& s, const Rational& t,
                  int g, int j1, int g2, int j2);

/// Column-0 deformation of weight_w: every occupancy power t^m in the table
/// is replaced by gamma*t^m. Reduces to weight_w at gamma = 1.
Rational weight_w0gamma(const Rational& u, const Rational& s, const Rational& t,
                        const Rational& gamma, int g, int j1, int g2, int j2);

/// Conjugated weight w*_{v,s}(i1, j1; i2, j2) =
///   (s^2; t)_{i1} (t; t)_{i2} / ((s^2; t)_{i2} (t; t)_{i1}) * w_{v,s}(i2, j1; i1, j2).
/// Throws std::domain_error when a Pochhammer denominator vanishes.
Rational weight_wstar(const Rational& v, const Rational& s, const Rational& t,
                      int g, int j1, int g2, int j2);

/// Column-0 deformation of weight_wstar (gamma inserted next to every
/// occupancy power of t, in the Pochhammer ratio as well).
Rational weight_wstar0gamma(const Rational& v, const Rational& s, const Rational& t,
                            const Rational& gamma, int g, int j1, int g2, int j2);

/// Column Pochhammer-style ratio with gamma riding every power of t:
/// prod_{k=i2}^{i1-1} (1 - s^2 gamma t^k)/(1 - gamma t^{k+1}) for i1 >= i2,
/// the reciprocal product for i1 < i2. At gamma = 1 this is the usual
/// (s^2; t)_{i1} (t; t)_{i2} / ((s^2; t)_{i2} (t; t)_{i1}) conjugation ratio.
/// Throws std::domain_error on a vanishing denominator.
Rational conjugation_ratio(const Rational& s, const Rational& t, const Rational& gamma,
                           int i1, int i2);

/// Six-vertex cross weight R_z(i1, j1; i2, j2) with all indices in {0,1}:
///   (0,0;0,0) -> 1            (1,1;1,1) -> t
///   (0,1;0,1) -> (1-t z)/(1-z)   (1,0;1,0) -> (1-t z)/(1-z)
///   (0,0;1,1) -> (1-t) z/(1-z)   (1,1;0,0) -> (1-t)/(1-z)
/// and 0 otherwise (conservation i1 - j1 = i2 - j2).
/// Throws std::domain_error at the pole z = 1.
Rational weight_cross(const Rational& z, const Rational& t,
                      int i1, int j1, int i2, int j2);

/// ParamSet wrappers: s is read from the column index x (and gamma from
/// params where the deformed tables are involved).
Rational weight_w(const ParamSet& params, const Rational& u, int x,
                  int g, int j1, int g2, int j2);
Rational weight_wstar(const ParamSet& params, const Rational& v, int x,
                      int g, int j1, int g2, int j2);
Rational weight_w0gamma(const ParamSet& params, const Rational& u,
                        int g, int j1, int g2, int j2);
Rational weight_cross(const ParamSet& params, const Rational& z,
                      int i1, int j1, int i2, int j2);

}  // namespace shl
