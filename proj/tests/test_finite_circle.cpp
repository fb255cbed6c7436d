#include <doctest.h>

#include <algorithm>
#include <set>

#include "circat/finite_circle.hpp"
#include "circat/functional.hpp"
#include "oracle.hpp"

using namespace circat;
using namespace circat::testing;

namespace {

const std::uint32_t kSmallPrimes[] = {5, 7, 11, 13, 17, 19, 23};

}  // namespace

TEST_CASE("Legendre symbol via Euler's criterion") {
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 7) == -1);
  CHECK(legendre(0, 5) == 0);
  CHECK(legendre(10, 5) == 0);
  CHECK(legendre(2, 7) == 1);   // 3^2 = 2 mod 7
  CHECK(legendre(3, 7) == -1);
  CHECK_THROWS_AS(legendre(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(legendre(1, 2), std::invalid_argument);

  // against explicit square sets
  for (std::uint32_t p : kSmallPrimes) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::uint64_t a = 1; a < p; ++a) {
      CHECK(legendre(static_cast<std::int64_t>(a), p) == (squares.count(a) ? 1 : -1));
    }
  }
}

TEST_CASE("enumerating the circle mod 5") {
  FiniteCircle circle = enumerate_circle(5);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> expected = {
      {0, 1}, {0, 4}, {1, 0}, {4, 0}};
  CHECK(circle.points == expected);
}

TEST_CASE("point count law and circle membership") {
  for (std::uint32_t p : kSmallPrimes) {
    FiniteCircle circle = enumerate_circle(p);
    CHECK(circle.points.size() ==
          static_cast<std::size_t>(static_cast<std::int64_t>(p) - legendre(-1, p)));
    for (const auto& [x, y] : circle.points) {
      CHECK((static_cast<std::uint64_t>(x) * x + static_cast<std::uint64_t>(y) * y) % p == 1);
    }
  }
  CHECK(enumerate_circle(7).points.size() == 8);
  CHECK(enumerate_circle(13).points.size() == 12);
}

TEST_CASE("enumeration matches the exhaustive scan") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 41u, 101u}) {
    CHECK(enumerate_circle(p).points == brute_force_circle_points(p));
  }
}

TEST_CASE("parallel enumeration equals the serial reference") {
  for (std::uint32_t p : {5u, 23u, 101u, 65521u}) {
    FiniteCircle serial = enumerate_circle_serial(p);
    FiniteCircle parallel = enumerate_circle(p);
    CHECK(serial.modulus == parallel.modulus);
    CHECK(serial.points == parallel.points);
  }
}

TEST_CASE("point set is closed under the square symmetries") {
  for (std::uint32_t p : kSmallPrimes) {
    FiniteCircle circle = enumerate_circle(p);
    std::set<std::pair<std::uint32_t, std::uint32_t>> points(circle.points.begin(),
                                                             circle.points.end());
    for (const auto& [x, y] : points) {
      CHECK(points.count({y, x}) == 1);
      CHECK(points.count({static_cast<std::uint32_t>((p - x) % p), y}) == 1);
      CHECK(points.count({x, static_cast<std::uint32_t>((p - y) % p)}) == 1);
    }
  }
}

TEST_CASE("the u-parametrization sweeps out exactly the circle") {
  for (std::uint32_t p : kSmallPrimes) {
    auto swept = parametrized_circle_points(p);
    auto enumerated = enumerate_circle(p).points;
    CHECK(swept == enumerated);
    CHECK(std::adjacent_find(swept.begin(), swept.end()) == swept.end());  // u-values collide never
  }
  CHECK(parametrized_circle_points(101) == enumerate_circle(101).points);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_circle(15), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_circle(2), std::invalid_argument);
  std::uint32_t big_prime = kEnumerationBudget;
  while (!is_odd_prime(big_prime)) ++big_prime;
  CHECK_THROWS_AS(enumerate_circle(big_prime), std::out_of_range);
}

TEST_CASE("finite functional on the stated instances") {
  PrimeField f5(5);
  CHECK(psi_finite(5, 0, 0) == f5.one());
  CHECK(psi_finite(5, 2, 0) == f5.element(3));
  CHECK(psi_finite(5, 1, 1) == f5.zero());

  // out of the admissible range k + l < p - 1
  CHECK_THROWS_AS(psi_finite(5, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(psi_finite(5, 4, 0), std::out_of_range);
  CHECK_NOTHROW(psi_finite(5, 3, 0));
}

TEST_CASE("power sums: parallel kernel equals serial reference and raw scan") {
  for (std::uint32_t p : {13u, 101u}) {
    FiniteCircle circle = enumerate_circle(p);
    auto brute = brute_force_circle_points(p);
    for (unsigned k = 0; k <= 6; ++k) {
      for (unsigned l = 0; l <= 6; ++l) {
        std::uint64_t serial = circle_power_sum_serial(circle, k, l);
        CHECK(circle_power_sum(circle, k, l) == serial);
        std::uint64_t direct = 0;
        for (const auto& [x, y] : brute) {
          std::uint64_t xt = 1, yt = 1;
          for (unsigned i = 0; i < k; ++i) xt = xt * x % p;
          for (unsigned i = 0; i < l; ++i) yt = yt * y % p;
          direct = (direct + xt * yt) % p;
        }
        CHECK(serial == direct);
      }
    }
  }
}

TEST_CASE("cross-check ties the finite functional to the rational one") {
  for (std::uint32_t p : kSmallPrimes) {
    CrossCheckReport report = cross_check(p);
    CHECK(report.all_passed());
    CHECK(report.checked == (p - 1) * p / 2);
    CHECK(report.mismatch_count == 0);
  }

  CrossCheckReport p5 = cross_check(5);
  CHECK(p5.checked == 10);

  // the (2,2) entry at p = 7 is Omega(1,1) mod 7 = 1/8 mod 7 = 1
  CrossCheckReport p7 = cross_check(7);
  auto it = std::find_if(p7.entries.begin(), p7.entries.end(),
                         [](const CrossCheckEntry& e) { return e.k == 2 && e.l == 2; });
  REQUIRE(it != p7.entries.end());
  CHECK(it->expected == 1);
  CHECK(it->got == 1);
}
