#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shl/identities.hpp"
#include "shl/matrix.hpp"
#include "shl/paramgen.hpp"
#include "shl/params.hpp"
#include "shl/rational.hpp"
#include "shl/signature.hpp"
#include "shl/symmetrization.hpp"

using namespace shl;

namespace {

Signature sig(const std::string& text) { return Signature::parse(text); }

bool mentions(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// The n = 1 identity-check parameters used in several places below.
ParamSet n1_params() {
  ParamSet p;
  p.t = Rational(1, 3);
  p.gamma = Rational(2);
  p.s = InhomogeneitySequence::constant(Rational(1, 5));
  p.u = {Rational(1, 7), Rational(1, 11)};
  return p;
}

ParamSet n2_params() {
  ParamSet p;
  p.t = Rational(1, 3);
  p.gamma = Rational(3, 2);
  p.s = InhomogeneitySequence::constant(Rational(1, 7));
  p.u = {Rational(1, 5), Rational(-1, 6), Rational(1, 9), Rational(-1, 10)};
  return p;
}

}  // namespace

TEST_CASE("truncation plan echo") {
  TruncationPlan plan;
  auto j = plan.echo();
  CHECK(j["max_part"] == 16);
  CHECK(j["n"] == 1);
  CHECK(j["mode"] == "fixed-M");
  CHECK(j["tolerance"] == "1/10000000000");

  plan.mode = TruncationMode::adaptive;
  CHECK(plan.echo()["mode"] == "adaptive");
}

TEST_CASE("admissibility diagnostics") {
  ParamSet p = n1_params();
  CHECK_FALSE(admissibility_violation(p).has_value());
  p.u[1] = Rational(99, 100);
  auto why = admissibility_violation(p);
  REQUIRE(why.has_value());
  CHECK(mentions(*why, "u index 1"));
}

TEST_CASE("shell enumeration") {
  auto base = even_shell(2, 0);
  REQUIRE(base.size() == 1);
  CHECK(base[0] == sig("[0,0]"));

  auto top = even_shell(2, 2);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == sig("[2,2]"));

  auto wide = even_shell(4, 1);
  REQUIRE(wide.size() == 2);
  CHECK(wide[0] == sig("[1,1,1,1]"));
  CHECK(wide[1] == sig("[1,1,0,0]"));

  auto empty = even_shell(0, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  CHECK(even_shell(0, 3).empty());

  // Shells partition the bounded even enumeration.
  for (int n = 1; n <= 3; ++n) {
    for (int cap = 0; cap <= 5; ++cap) {
      std::set<std::vector<int>> merged;
      std::size_t total = 0;
      for (int m = 0; m <= cap; ++m) {
        for (const auto& lam : even_shell(2 * n, m)) {
          if (m > 0) CHECK(lam.max_part() == m);
          merged.insert(lam.parts());
          ++total;
        }
      }
      auto direct = enumerate_even(2 * n, cap);
      CHECK(total == direct.size());
      CHECK(merged.size() == direct.size());
    }
  }
}

TEST_CASE("series coefficient closed form at the bottom shell") {
  ParamSet p = n1_params();
  Rational t = p.t, g = p.gamma, s0 = p.s_at(0);
  Rational expected = (1 - s0 * s0 / g) * (1 - g * t) /
                      pochhammer_t(t, t, 2) *
                      (1 - s0 * p.u[0]) * (1 - s0 * p.u[1]);
  CHECK(littlewood_coeff(sig("[0,0]"), p) == expected);

  TruncationPlan plan;
  plan.max_part = 0;
  CHECK(littlewood_lhs(p, plan) == expected * f_symmetrization(sig("[0,0]"), p));

  CHECK_THROWS_AS(littlewood_coeff(sig("[2,1,1,0]"), p), std::invalid_argument);
}

TEST_CASE("series coefficient splits columns") {
  ParamSet p = n2_params();
  for (const auto& lam : enumerate_even(4, 3)) {
    // Column 0 factor times plain factors for the higher columns.
    Rational expected(1);
    int m0 = lam.mult(0);
    expected /= pochhammer_t(p.t, p.t, m0);
    for (int j = 1; j <= m0 / 2; ++j)
      expected *= (1 - p.s_at(0) * p.s_at(0) / p.gamma * pow_int(p.t, 2 * j - 2)) *
                  (1 - p.gamma * pow_int(p.t, 2 * j - 1));
    for (const Rational& u : p.u) expected *= 1 - p.s_at(0) * u;
    for (auto [col, m] : lam.multiplicities()) {
      if (col == 0) continue;
      Rational sc = p.s_at(col);
      for (int j = 1; j <= m / 2; ++j)
        expected *= (1 - sc * sc * pow_int(p.t, 2 * j - 2)) / (1 - pow_int(p.t, 2 * j));
    }
    CHECK(littlewood_coeff(lam, p) == expected);
  }
}

TEST_CASE("closed side at n = 1") {
  ParamSet p = n1_params();
  Rational t = p.t, g = p.gamma, s0 = p.s_at(0);
  Rational u1 = p.u[0], u2 = p.u[1];
  Rational expected =
      ((1 - t) * (1 - s0 * u1) * (1 - s0 * u2) +
       (1 - g) * (t - s0 * s0 / g) * (1 - u1 * u2)) /
      (1 - u1 * u2);
  CHECK(littlewood_rhs(p) == expected);
}

TEST_CASE("closed side is symmetric in the rapidities") {
  ParamSet p = n2_params();
  Rational base = littlewood_rhs(p);
  ParamSet q = p;
  std::swap(q.u[0], q.u[3]);
  CHECK(littlewood_rhs(q) == base);
  std::swap(q.u[1], q.u[2]);
  CHECK(littlewood_rhs(q) == base);
}

TEST_CASE("refined identity at n = 1") {
  TruncationPlan plan;
  plan.n = 1;
  plan.max_part = 16;
  Report r = check_littlewood(n1_params(), plan);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.suite == "littlewood");
  CHECK(r.trace.size() == 17);
  CHECK(r.trace.back().residual <= 1e-10);
}

TEST_CASE("refined identity at n = 2") {
  TruncationPlan plan;
  plan.n = 2;
  plan.max_part = 12;
  Report r = check_littlewood(n2_params(), plan);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.trace.size() == 13);
}

TEST_CASE("refined identity rejects bad shapes") {
  TruncationPlan plan;
  plan.n = 2;  // but only two rapidities provided
  Report r = check_littlewood(n1_params(), plan);
  CHECK(r.verdict == Verdict::error);
  CHECK(r.trace.empty());

  ParamSet far = n1_params();
  far.u[0] = Rational(99, 100);
  TruncationPlan ok;
  Report r2 = check_littlewood(far, ok);
  CHECK(r2.verdict == Verdict::error);
  CHECK(mentions(r2.message, "inadmissible"));
  CHECK(r2.trace.empty());
}

TEST_CASE("adaptive truncation stops early") {
  TruncationPlan plan;
  plan.mode = TruncationMode::adaptive;
  Report r = check_littlewood(n1_params(), plan);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.trace.size() < 17);
  CHECK(r.plan["mode"] == "adaptive");
}

TEST_CASE("two-variable kernel specializations") {
  ParamSet p = n1_params();
  Rational t = p.t, g = p.gamma, s0 = p.s_at(0);

  CHECK(z2(p, t, pow_int(t, -2)) ==
        g * (1 - t) * (1 - s0 * pow_int(t, -2)) * (1 - s0 * t));

  Rational u(2, 7);
  CHECK(z2(p, u, 1 / u) == (1 - t) * (1 - g * s0 * u) * (1 - g * s0 / u));

  ParamSet plain = p;
  plain.gamma = 1;
  Rational x(1, 4), y(2, 9);
  CHECK(z2(plain, x, y) == (1 - t) * (1 - s0 * x) * (1 - s0 * y));
}

TEST_CASE("kernel and closed-side entries share one numerator") {
  ParamSet p = n2_params();
  Rational t = p.t, g = p.gamma, s0 = p.s_at(0);
  ParamSet shifted = p.with_s0(s0 / g);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Rational ui = p.u[i], uj = p.u[j];
      Rational numer = (1 - t) * (1 - s0 * ui) * (1 - s0 * uj) +
                       (1 - g) * (t - s0 * s0 / g) * (1 - ui * uj);
      CHECK(z2(shifted, ui, uj) == numer);
    }
}

TEST_CASE("pfaffian side reduces to the kernel at n = 1") {
  ParamSet p = generate_params(135, ParamShape{.n_vars = 2});
  CHECK(z2n_pfaffian_side(p) == z2(p, p.u[0], p.u[1]));
}

TEST_CASE("polynomial side property suite") {
  SUBCASE("n = 1") {
    Report r = check_z_properties(generate_params(141, ParamShape{.n_vars = 2}), 1);
    CHECK(r.verdict == Verdict::fail);
    CHECK(mentions(r.message, "property 4 (specialization closed form)"));
    CHECK(mentions(r.message, "the direct value equals"));
    CHECK_FALSE(mentions(r.message, "property 1"));
    CHECK_FALSE(mentions(r.message, "property 2"));
    CHECK_FALSE(mentions(r.message, "property 3"));
    CHECK_FALSE(mentions(r.message, "property 5"));
  }
  SUBCASE("n = 2") {
    Report r = check_z_properties(generate_params(142, ParamShape{.n_vars = 4}), 2);
    CHECK(r.verdict == Verdict::fail);
    CHECK(mentions(r.message, "property 4 (specialization closed form)"));
    CHECK_FALSE(mentions(r.message, "property 3"));
  }
}

TEST_CASE("frozen specialization") {
  SUBCASE("n = 1 pinned parameters") {
    ParamSet p = n1_params();
    Report r = check_frozen_corollary(p, 1);
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.lhs.has_value());
    REQUIRE(r.rhs.has_value());
    CHECK(r.lhs->exact == r.rhs->exact);
    CHECK(parse_rational(r.lhs->exact) != 0);

    SkewMatrix m(2);
    m.set(0, 1, frozen_entry(p, 1, 1, 2));
    CHECK(pfaffian(m) == frozen_closed_product(p, 1));
  }
  SUBCASE("unit gamma collapses both sides") {
    ParamSet p = n1_params();
    p.gamma = 1;
    Report r = check_frozen_corollary(p, 1);
    CHECK(r.verdict == Verdict::pass);
    CHECK(parse_rational(r.rhs->exact) == 0);
    CHECK(parse_rational(r.lhs->exact) == 0);
  }
  SUBCASE("n = 2 and n = 3 seeded parameters") {
    for (int n : {2, 3}) {
      ParamSet p = generate_params(150 + n, ParamShape{.n_vars = 0});
      Report r = check_frozen_corollary(p, n);
      CHECK(r.verdict == Verdict::pass);
    }
  }
  SUBCASE("singular frozen points report an error") {
    ParamSet p = n1_params();
    p.gamma = Rational(5, 9);  // gamma*s_0 = t^2 collides with the n = 2 grid
    Report r = check_frozen_corollary(p, 2);
    CHECK(r.verdict == Verdict::error);
    CHECK_FALSE(r.message.empty());
  }
}

TEST_CASE("pfaffian-sum identity with substitution audit") {
  ParamSet p = generate_params(161, ParamShape{.n_vars = 2,
                                               .needs_admissible = true,
                                               .epsilon = Rational(13, 20),
                                               .shifted_admissible = true});
  TruncationPlan plan;
  plan.n = 1;
  plan.max_part = 16;
  Report r = check_pfp(p, plan);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.message.empty());
}

TEST_CASE("classical specialization identity") {
  ParamSet p;
  p.t = Rational(1, 3);
  p.gamma = Rational(2);
  p.s = InhomogeneitySequence::constant(Rational(0));
  p.u = {Rational(1, 5), Rational(1, 7)};
  TruncationPlan plan;
  Report r = check_class_specialization(p, plan);
  CHECK(r.verdict == Verdict::pass);

  ParamSet bad = n1_params();
  Report r2 = check_class_specialization(bad, plan);
  CHECK(r2.verdict == Verdict::error);
}

TEST_CASE("unrefined identity") {
  ParamSet p = generate_params(171, ParamShape{.n_vars = 2,
                                               .needs_admissible = true,
                                               .epsilon = Rational(13, 20),
                                               .unit_gamma = true});
  TruncationPlan plan;
  Report r = check_unrefined(p, plan);
  CHECK(r.verdict == Verdict::pass);

  ParamSet off = p;
  off.gamma = Rational(2);
  Report r2 = check_unrefined(off, plan);
  CHECK(r2.verdict == Verdict::error);
}

TEST_CASE("closed sides coincide at unit gamma") {
  for (std::uint64_t seed : {181, 182}) {
    ParamSet p = generate_params(seed, ParamShape{.n_vars = 4});
    p.gamma = 1;
    CHECK(class_rhs(p) == unref_rhs(p));
  }
  ParamSet p = generate_params(183, ParamShape{.n_vars = 2});
  p.gamma = 1;
  CHECK(class_rhs(p) == unref_rhs(p));
  CHECK(unref_rhs(p) == (1 - p.t) / (1 - p.u[0] * p.u[1]));
}

TEST_CASE("weighted sum matches the unrefined series at unit gamma") {
  ParamSet p = generate_params(191, ParamShape{.n_vars = 2, .needs_admissible = true});
  p.gamma = 1;
  TruncationPlan plan;
  plan.max_part = 8;
  CHECK(partition_P(p, plan) == unref_lhs(p, plan));
}
