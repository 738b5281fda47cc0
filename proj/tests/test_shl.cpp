#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shl/lattice.hpp"
#include "shl/paramgen.hpp"
#include "shl/params.hpp"
#include "shl/rational.hpp"
#include "shl/signature.hpp"
#include "shl/symmetrization.hpp"

using namespace shl;

namespace {

Signature sig(const std::string& text) { return Signature::parse(text); }

ParamSet two_var_params() {
  ParamSet p;
  p.t = Rational(1, 3);
  p.s = InhomogeneitySequence::constant(Rational(1, 5));
  p.u = {Rational(1, 2), Rational(1, 7)};
  return p;
}

}  // namespace

TEST_CASE("symmetrization pinned values") {
  ParamSet one;
  one.t = Rational(1, 3);
  one.s = InhomogeneitySequence::constant(Rational(1, 5));
  one.u = {Rational(1, 2)};
  CHECK(f_symmetrization(sig("[0]"), one) == Rational(20, 27));
  CHECK(f_symmetrization(sig("[0]"), one) ==
        (1 - one.t) / (1 - one.s_at(0) * one.u[0]));

  ParamSet p = two_var_params();
  Rational t = p.t, s0 = p.s_at(0);
  CHECK(f_symmetrization(sig("[0,0]"), p) ==
        (1 - t) * (1 - t) * (1 + t) / ((1 - s0 * p.u[0]) * (1 - s0 * p.u[1])));

  ParamSet zs = p;
  zs.s = InhomogeneitySequence::constant(Rational(0));
  CHECK(f_symmetrization(sig("[1,0]"), zs) ==
        (1 - t) * (1 - t) * (zs.u[0] + zs.u[1]));

  EvalRequest req{sig("[1,0]"), zs};
  CHECK(f_symmetrization(req) == f_symmetrization(sig("[1,0]"), zs));
}

TEST_CASE("symmetrization rejects coincident rapidities") {
  ParamSet p = two_var_params();
  p.u = {Rational(1, 2), Rational(1, 2)};
  CHECK_THROWS_AS(f_symmetrization(sig("[1,0]"), p), std::domain_error);
}

TEST_CASE("symmetrization is symmetric in the rapidities") {
  ParamSet p = generate_params(51, ParamShape{.n_vars = 3});
  Signature lam = sig("[4,2,1]");
  Rational base = f_symmetrization(lam, p);
  std::vector<int> perm = {0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    ParamSet q = p;
    for (int i = 0; i < 3; ++i) q.u[i] = p.u[perm[i]];
    CHECK(f_symmetrization(lam, q) == base);
  }
}

TEST_CASE("symmetrization agrees with the lattice route") {
  for (std::uint64_t seed : {61, 62}) {
    ParamSet p = generate_params(seed, ParamShape{.n_vars = 2});
    for (const auto& lam : enumerate_bounded(2, 4))
      CHECK(f_symmetrization(lam, p) == lattice_F(lam, p));
  }
  ParamSet p3 = generate_params(63, ParamShape{.n_vars = 3});
  for (const auto& lam : enumerate_bounded(3, 2))
    CHECK(f_symmetrization(lam, p3) == lattice_F(lam, p3));
}

TEST_CASE("homogeneous scaling at vanishing inhomogeneities") {
  ParamSet p = two_var_params();
  p.s = InhomogeneitySequence::constant(Rational(0));
  Rational c(3, 4);
  for (const auto& lam : enumerate_bounded(2, 3)) {
    ParamSet scaled = p;
    for (auto& u : scaled.u) u *= c;
    CHECK(f_symmetrization(lam, scaled) ==
          pow_int(c, lam.weight()) * f_symmetrization(lam, p));
  }
}

TEST_CASE("refined evaluator reduces at unit gamma") {
  ParamSet p = generate_params(71, ParamShape{.n_vars = 2});
  p.gamma = 1;
  for (const auto& lam : enumerate_bounded(2, 3))
    CHECK(f_alpha(lam, p) == f_symmetrization(lam, p));
}

TEST_CASE("refined evaluator matches the deformed lattice") {
  ParamSet p = generate_params(72, ParamShape{.n_vars = 2});

  SUBCASE("generic gamma") {
    for (const auto& lam : enumerate_bounded(2, 3))
      CHECK(f_alpha(lam, p) == lattice_F_deformed(lam, p));
  }
  SUBCASE("gamma = t") {
    ParamSet q = p;
    q.gamma = q.t;
    for (const auto& lam : enumerate_bounded(2, 2))
      CHECK(f_alpha(lam, q) == lattice_F_deformed(lam, q));
  }
  SUBCASE("three variables") {
    ParamSet p3 = generate_params(73, ParamShape{.n_vars = 3});
    for (const auto& lam : enumerate_bounded(3, 2))
      CHECK(f_alpha(lam, p3) == lattice_F_deformed(lam, p3));
  }
}

TEST_CASE("deformed lattice at gamma = t is an occupancy shift") {
  // At gamma = t the deformed column-0 table coincides with the plain table
  // carrying one extra unit of occupancy, so an evaluator built from the
  // shifted plain table reproduces the deformed partition function.
  ParamSet p = generate_params(74, ParamShape{.n_vars = 2});
  p.gamma = p.t;
  auto shifted = [](const Rational& u, const Rational& s, const Rational& t,
                    const Rational&, int x, int g, int j1, int g2, int j2) {
    if (x == 0) return weight_w(u, s, t, g + 1, j1, g2 + 1, j2);
    return weight_w(u, s, t, g, j1, g2, j2);
  };
  LatticeEvaluator via_shift(p, shifted, p.gamma);
  for (const auto& lam : enumerate_bounded(2, 2))
    CHECK(via_shift.value(lam) == lattice_F_deformed(lam, p));
}

TEST_CASE("classical polynomial pinned values") {
  Rational t(1, 3);
  std::vector<Rational> u2 = {Rational(1, 2), Rational(1, 3)};

  CHECK(hl_polynomial(sig("[0,0]"), u2, t) == 1);
  CHECK(hl_polynomial(sig("[0]"), {Rational(2, 7)}, t) == 1);
  CHECK(hl_polynomial(sig("[1]"), {Rational(2, 7)}, t) == Rational(2, 7));
  CHECK(hl_polynomial(sig("[1,0]"), u2, t) == u2[0] + u2[1]);
  CHECK(hl_polynomial(sig("[1,1]"), u2, t) == u2[0] * u2[1]);
  CHECK(hl_polynomial(sig("[2,0]"), u2, t) ==
        u2[0] * u2[0] + u2[1] * u2[1] + (1 - t) * u2[0] * u2[1]);
  CHECK(hl_polynomial(sig("[2,1]"), u2, t) ==
        u2[0] * u2[0] * u2[1] + u2[0] * u2[1] * u2[1]);
}

TEST_CASE("classical polynomial is monic in the dominant monomial") {
  // Leading coefficient 1: scale u -> c*u and compare degrees via weights.
  Rational t(2, 7);
  std::vector<Rational> u = {Rational(1, 2), Rational(1, 5), Rational(1, 11)};
  for (const auto& lam : enumerate_bounded(3, 2)) {
    Rational c(5, 3);
    std::vector<Rational> scaled = u;
    for (auto& x : scaled) x *= c;
    CHECK(hl_polynomial(lam, scaled, t) ==
          pow_int(c, lam.weight()) * hl_polynomial(lam, u, t));
  }
}

TEST_CASE("vanishing normalization is rejected") {
  // t a root of unity makes (t;t)_m vanish for m >= 2.
  std::vector<Rational> u = {Rational(1, 2), Rational(1, 3)};
  CHECK_THROWS_AS(hl_polynomial(sig("[0,0]"), u, Rational(-1)), std::domain_error);
}
