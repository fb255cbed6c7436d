#include <doctest.h>

#include <stdexcept>

#include "circat/functional.hpp"
#include "circat/prime_field.hpp"
#include "circat/rational.hpp"
#include "test_util.hpp"

using namespace circat;
using circat::testing::frac;

TEST_CASE("rational construction normalizes to reduced positive-denominator form") {
  CHECK(Rational(BigInt(2), BigInt(4)) == frac(1, 2));
  CHECK(Rational(BigInt(-2), BigInt(4)) == frac(-1, 2));
  CHECK(Rational(BigInt(2), BigInt(-4)) == frac(-1, 2));
  CHECK(Rational(BigInt(-2), BigInt(-4)) == frac(1, 2));
  CHECK(Rational(BigInt(0), BigInt(17)).den() == 1);
  CHECK(frac(2, -4).den() > 0);

  // idempotence: re-normalizing a reduced value changes nothing
  Rational r = frac(6, 8);
  CHECK(Rational(r.num(), r.den()) == r);
  CHECK(Rational(Rational(r.num(), r.den()).num(), Rational(r.num(), r.den()).den()) == r);

  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(frac(1, 2) + frac(1, 3) == frac(5, 6));
  CHECK(frac(1, 2) - frac(1, 2) == Rational(0));
  CHECK(frac(2, 3) * frac(3, 4) == frac(1, 2));
  CHECK(frac(1, 2) / frac(1, 4) == Rational(2));
  CHECK(-frac(1, 2) == frac(-1, 2));
  CHECK(frac(1, 2).inverse() == Rational(2));

  CHECK_THROWS_AS(frac(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational ordering and predicates") {
  CHECK(frac(1, 3) < frac(1, 2));
  CHECK(frac(-1, 2) < Rational(0));
  CHECK(frac(2, 3) > frac(1, 2));
  CHECK(Rational(0).is_zero());
  CHECK(frac(3, 3).is_one());
  CHECK(Rational(5).is_integer());
  CHECK_FALSE(frac(5, 2).is_integer());
  CHECK(frac(-7, 3).sign() == -1);
}

TEST_CASE("rational text form") {
  CHECK(frac(5, 6).to_string() == "5/6");
  CHECK(Rational(-3).to_string() == "-3");
  CHECK(frac(-1, 2).to_string() == "-1/2");
  CHECK(Rational::parse("3/6") == frac(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse(" 2 / 4 ") == frac(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("field axioms hold exactly on randomized rational triples") {
  auto rng = trial_rng(2024, 0, 0);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_small_rational(rng);
    Rational b = random_small_rational(rng);
    Rational c = random_small_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("prime field construction accepts odd primes only") {
  CHECK(PrimeField(5).modulus() == 5);
  CHECK(PrimeField(2147483647).modulus() == 2147483647u);  // 2^31 - 1
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(561), std::invalid_argument);  // Carmichael
  CHECK_THROWS_AS(PrimeField(std::uint64_t(1) << 32), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f5(5);
  CHECK(f5.element(2).inverse() == f5.element(3));
  CHECK(f5.element(4) + f5.element(3) == f5.element(2));
  CHECK(f5.element(2) * f5.element(4) == f5.element(3));
  CHECK(-f5.element(2) == f5.element(3));
  CHECK(f5.element(-1) == f5.element(4));
  CHECK(f5.element(2).to_string() == "2 (mod 5)");
  CHECK_THROWS_AS(f5.one() / f5.zero(), std::domain_error);
  CHECK_THROWS_AS(f5.zero().inverse(), std::domain_error);

  PrimeField f7(7);
  CHECK_THROWS_AS(f5.one() + f7.one(), std::invalid_argument);
  CHECK_THROWS_AS(f5.one() * f7.element(3), std::invalid_argument);
}

TEST_CASE("prime field axioms hold exhaustively for p = 7") {
  PrimeField f(7);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      CHECK(f.element(a) + f.element(b) == f.element(a + b));
      CHECK(f.element(a) * f.element(b) == f.element(a * b));
      for (int c = 0; c < 7; ++c) {
        CHECK(f.element(a) * (f.element(b) + f.element(c)) ==
              f.element(a) * f.element(b) + f.element(a) * f.element(c));
      }
    }
    if (a != 0) CHECK(f.element(a) * f.element(a).inverse() == f.one());
  }
}

TEST_CASE("rational_mod_p reduces coprime denominators") {
  PrimeField f5(5);
  CHECK(rational_mod_p(frac(1, 2), f5) == f5.element(3));
  CHECK(rational_mod_p(frac(1, 8), f5) == f5.element(2));
  CHECK(rational_mod_p(Rational(7), f5) == f5.element(2));
  CHECK(rational_mod_p(frac(-1, 3), f5) == f5.element(3));  // -1 * 3^-1 = 4*2 = 8 = 3
  CHECK_THROWS_AS(rational_mod_p(frac(1, 5), f5), std::domain_error);
  CHECK_THROWS_AS(rational_mod_p(frac(3, 10), f5), std::domain_error);
}

TEST_CASE("rational_mod_p is a ring homomorphism") {
  PrimeField f13(13);
  auto rng = trial_rng(2024, 1, 0);
  int done = 0;
  while (done < 200) {
    Rational x = random_small_rational(rng);
    Rational y = random_small_rational(rng);
    if (x.den() % 13 == 0 || y.den() % 13 == 0) continue;
    if ((x + y).den() % 13 == 0 || (x * y).den() % 13 == 0) continue;
    CHECK(rational_mod_p(x + y, f13) == rational_mod_p(x, f13) + rational_mod_p(y, f13));
    CHECK(rational_mod_p(x * y, f13) == rational_mod_p(x, f13) * rational_mod_p(y, f13));
    ++done;
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(10, 7) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  // Pascal rule on a sweep
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}
