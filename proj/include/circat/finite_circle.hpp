#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "circat/prime_field.hpp"

namespace circat {

// Enumeration works point tables of size p; anything past this is refused.
inline constexpr std::uint32_t kEnumerationBudget = 1u << 20;

// Legendre symbol (a/p) via Euler's criterion a^((p-1)/2) mod p.
// Throws std::invalid_argument unless p is an odd prime.
int legendre(std::int64_t a, std::uint32_t p);

// All solutions of x^2 + y^2 = 1 over F_p, sorted by (x, y).
// |S^1(F_p)| = p - legendre(-1, p).
struct FiniteCircle {
  std::uint32_t modulus = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
};

// Direct scan with a precomputed table of squares; the OpenMP kernel uses a
// count/prefix/fill pass so the output order never depends on scheduling.
// Throws std::invalid_argument for non-primes, std::out_of_range past the
// enumeration budget.
FiniteCircle enumerate_circle(std::uint32_t p);
FiniteCircle enumerate_circle_serial(std::uint32_t p);

// sum over circle points of x^k y^l, reduced mod p.
std::uint64_t circle_power_sum(const FiniteCircle& circle, unsigned k, unsigned l);
std::uint64_t circle_power_sum_serial(const FiniteCircle& circle, unsigned k, unsigned l);

// The finite-field functional -(-1/p) * sum x^k y^l, defined for
// 0 <= k+l < p-1 only; outside that range the call is refused with
// std::out_of_range rather than extrapolated.
PrimeFieldElement psi_finite(std::uint32_t p, unsigned k, unsigned l);
PrimeFieldElement psi_finite(const FiniteCircle& circle, unsigned k, unsigned l);

// Circle points generated by u -> [(1-u^2)/(1+u^2), 2u/(1+u^2)] over all
// u with 1 + u^2 != 0, together with [-1, 0]; sorted by (x, y). Must equal
// the enumerated point set.
std::vector<std::pair<std::uint32_t, std::uint32_t>> parametrized_circle_points(std::uint32_t p);

struct CrossCheckEntry {
  unsigned k = 0;
  unsigned l = 0;
  std::uint64_t got = 0;       // psi_finite value
  std::uint64_t expected = 0;  // Omega reduction mod p (0 for odd parities)
  bool ok = false;
};

struct CrossCheckReport {
  std::uint32_t modulus = 0;
  unsigned checked = 0;
  unsigned mismatch_count = 0;
  std::vector<CrossCheckEntry> entries;  // every (k, l) with k + l < p - 1

  bool all_passed() const { return mismatch_count == 0; }
};

// Exhaustive comparison of psi_finite against the rational functional value
// reduced mod p, over the full admissible exponent range.
CrossCheckReport cross_check(std::uint32_t p);

}  // namespace circat
