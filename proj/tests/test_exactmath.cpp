#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "shl/matrix.hpp"
#include "shl/poly.hpp"
#include "shl/rational.hpp"

using namespace shl;

namespace {

Rational q(const std::string& text) { return parse_rational(text); }

// Uniform small rational with denominator >= 1.
Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational out(num(rng), den(rng));
  out.canonicalize();
  return out;
}

SkewMatrix random_skew(std::mt19937_64& rng, int dim) {
  SkewMatrix a(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) a.set(i, j, random_rational(rng, 9, 9));
  return a;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(q("3/4") == Rational(3, 4));
  CHECK(q("-7") == Rational(-7));
  CHECK(q("6/8") == Rational(3, 4));
  CHECK(rational_str(Rational(3, 4)) == "3/4");
  CHECK(rational_str(Rational(-5)) == "-5");
  CHECK(rational_str(Rational(0)) == "0");
  CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(q("abc"), std::invalid_argument);
  CHECK_THROWS_AS(q(""), std::invalid_argument);
}

TEST_CASE("rational list parsing") {
  auto xs = parse_rational_list("1/5,-1/6,1/9");
  REQUIRE(xs.size() == 3);
  CHECK(xs[0] == Rational(1, 5));
  CHECK(xs[1] == Rational(-1, 6));
  CHECK(xs[2] == Rational(1, 9));
  CHECK_THROWS_AS(parse_rational_list("1/5,,1/9"), std::invalid_argument);
}

TEST_CASE("shadow is a plain double image") {
  CHECK(shadow(Rational(1, 2)) == doctest::Approx(0.5));
  CHECK(shadow(Rational(-3)) == doctest::Approx(-3.0));
}

TEST_CASE("integer powers incl. negative exponents") {
  CHECK(pow_int(q("2/3"), 3) == q("8/27"));
  CHECK(pow_int(q("2/3"), -2) == q("9/4"));
  CHECK(pow_int(q("5"), 0) == 1);
  CHECK(pow_int(Rational(0), 4) == 0);
  CHECK_THROWS_AS(pow_int(Rational(0), -1), std::domain_error);
}

TEST_CASE("t-Pochhammer values and recurrence") {
  Rational t(1, 3);
  CHECK(pochhammer_t(q("1/5"), t, 0) == 1);
  CHECK(pochhammer_t(q("1/5"), t, 1) == q("4/5"));
  // (a;t)_2 = (1-a)(1-at)
  CHECK(pochhammer_t(q("1/5"), t, 2) == q("4/5") * (1 - q("1/15")));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Rational a = random_rational(rng, 6, 7);
    Rational tt = random_rational(rng, 5, 9);
    long k = static_cast<long>(rng() % 21);
    // (a;t)_{k+1} = (a;t)_k (1 - a t^k)
    CHECK(pochhammer_t(a, tt, k + 1) == pochhammer_t(a, tt, k) * (1 - a * pow_int(tt, k)));
  }
}

TEST_CASE("determinant basics") {
  Matrix id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(determinant(id3) == 1);

  Matrix one = {{q("-7/3")}};
  CHECK(determinant(one) == q("-7/3"));

  Matrix two = {{q("1/2"), q("1/3")}, {q("1/5"), q("1/7")}};
  CHECK(determinant(two) == q("1/2") * q("1/7") - q("1/3") * q("1/5"));

  // Repeated row kills the determinant.
  Matrix sing = {{1, 2, 3}, {1, 2, 3}, {0, 1, 1}};
  CHECK(determinant(sing) == 0);
}

TEST_CASE("determinant is multiplicative on a random pair") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 3;
    Matrix a(n, std::vector<Rational>(n)), b(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = random_rational(rng, 5, 5);
        b[i][j] = random_rational(rng, 5, 5);
      }
    Matrix ab(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) ab[i][j] += a[i][k] * b[k][j];
    CHECK(determinant(ab) == determinant(a) * determinant(b));
  }
}

TEST_CASE("skew matrix storage") {
  SkewMatrix a(4);
  a.set(0, 1, q("2/3"));
  a.set(2, 3, q("-1/7"));
  CHECK(a.at(0, 1) == q("2/3"));
  CHECK(a.at(1, 0) == q("-2/3"));
  CHECK(a.at(3, 2) == q("1/7"));
  CHECK(a.at(1, 1) == 0);
  CHECK(a.at(0, 2) == 0);

  Matrix d = a.dense();
  CHECK(d[0][1] == q("2/3"));
  CHECK(d[1][0] == q("-2/3"));

  CHECK_THROWS_AS(SkewMatrix(3), std::invalid_argument);
  CHECK_THROWS_AS(a.set(2, 2, Rational(1)), std::invalid_argument);
}

TEST_CASE("pfaffian small closed forms") {
  SkewMatrix zero(0);
  CHECK(pfaffian(zero) == 1);

  SkewMatrix two(2);
  two.set(0, 1, q("5/9"));
  CHECK(pfaffian(two) == q("5/9"));

  SkewMatrix four(4);
  Rational a12 = q("1/2"), a13 = q("1/3"), a14 = q("1/5");
  Rational a23 = q("-2/7"), a24 = q("3/4"), a34 = q("1/11");
  four.set(0, 1, a12);
  four.set(0, 2, a13);
  four.set(0, 3, a14);
  four.set(1, 2, a23);
  four.set(1, 3, a24);
  four.set(2, 3, a34);
  CHECK(pfaffian(four) == a12 * a34 - a13 * a24 + a14 * a23);
}

TEST_CASE("pfaffian squared equals determinant") {
  std::mt19937_64 rng(13);
  for (int dim = 2; dim <= 8; dim += 2) {
    for (int trial = 0; trial < 8; ++trial) {
      SkewMatrix a = random_skew(rng, dim);
      Rational pf = pfaffian(a);
      CHECK(pf * pf == determinant(a.dense()));
    }
  }
}

TEST_CASE("both pfaffian algorithms agree") {
  std::mt19937_64 rng(17);
  for (int dim : {2, 4, 6, 8}) {
    for (int trial = 0; trial < 6; ++trial) {
      SkewMatrix a = random_skew(rng, dim);
      CHECK(pfaffian_expansion(a) == pfaffian_elimination(a));
    }
  }
}

TEST_CASE("pfaffian flips sign under an index transposition") {
  std::mt19937_64 rng(19);
  SkewMatrix a = random_skew(rng, 6);
  // Swap indices 1 and 2 simultaneously in rows and columns.
  std::vector<int> perm = {0, 2, 1, 3, 4, 5};
  SkewMatrix b(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) b.set(i, j, a.at(perm[i], perm[j]));
  CHECK(pfaffian(b) == -pfaffian(a));
}

TEST_CASE("polynomial basics") {
  Poly p(std::vector<Rational>{q("1"), q("0"), q("-2")});  // 1 - 2x^2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(2) == -2);
  CHECK(p.coeff(5) == 0);
  CHECK(p(q("1/2")) == q("1/2"));

  // Trailing zeros are trimmed away.
  Poly padded(std::vector<Rational>{q("3"), q("1"), q("0"), q("0")});
  CHECK(padded.degree() == 1);

  Poly zero(std::vector<Rational>{});
  CHECK(zero(q("4")) == 0);
}

TEST_CASE("interpolation pinned examples") {
  Poly c = interpolate({{q("0"), q("1")}, {q("1"), q("1")}});
  CHECK(c.degree() == 0);
  CHECK(c.coeff(0) == 1);

  Poly sq = interpolate({{q("0"), q("0")}, {q("1"), q("1")}, {q("2"), q("4")}});
  CHECK(sq == Poly(std::vector<Rational>{q("0"), q("0"), q("1")}));

  CHECK_THROWS_AS(interpolate({{q("1"), q("2")}, {q("1"), q("3")}}),
                  std::invalid_argument);
}

TEST_CASE("interpolation round trip and direct evaluation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int deg = static_cast<int>(rng() % 7);
    std::vector<Rational> coeffs;
    for (int k = 0; k <= deg; ++k) coeffs.push_back(random_rational(rng, 8, 5));
    Poly original(coeffs);

    std::vector<std::pair<Rational, Rational>> pts;
    for (int k = 0; k <= deg; ++k) {
      Rational x(3 * k - deg, 7);
      x.canonicalize();
      pts.emplace_back(x, original(x));
    }
    Poly rebuilt = interpolate(pts);
    CHECK(rebuilt == original);

    Rational probe(3, 7);
    CHECK(interpolate_at(pts, probe) == original(probe));
  }
}
