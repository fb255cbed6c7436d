#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circat/polynomial.hpp"
#include "circat/rational.hpp"

namespace circat {

// A circle in the affine plane over Q: center [a, b], radius r != 0.
// The unit circle is CircleSpec(0, 0, 1).
struct CircleSpec {
  Rational center_a;
  Rational center_b;
  Rational radius;

  // Throws std::invalid_argument when r == 0.
  CircleSpec(Rational a, Rational b, Rational r);
  static CircleSpec unit() { return {0, 0, 1}; }

  // (alpha_1 - a)^2 + (alpha_2 - b)^2 - r^2; generates the vanishing ideal.
  QPoly generator() const;
};

// The circular integral functional on monomials: Omega(m, n) when
// (k, l) = (2m, 2n), and 0 whenever either exponent is odd.
Rational psi_monomial(unsigned k, unsigned l);

// Linear extension of psi_monomial to all of Q[alpha_1, alpha_2].
Rational psi(const QPoly& p);

// The unique circular integral functional for an arbitrary circle:
// psi_{r,[a,b]}(a1^k a2^l) = r * psi((a + r*a1)^k (b + r*a2)^l), extended
// linearly. The substituted product is expanded with exact binomial
// coefficients and fed through psi_monomial directly.
Rational psi_general(const CircleSpec& circle, const QPoly& p);

// Cross-check route: reduce to canonical form rho + alpha_2*omega first and
// evaluate psi on rho alone (the omega part has odd alpha_2-degree, hence
// contributes nothing). Agrees with psi(p) by Locality.
Rational psi_via_canonical(const QPoly& p);

// Deterministic small-rational polynomial generator used by the axiom
// verifier and the test suites: coefficients have numerator in [-9, 9] and
// denominator in [1, 9], term degrees are bounded by max_degree. Directly
// reducing mt19937_64 output keeps the stream identical across platforms.
QPoly random_polynomial(std::mt19937_64& rng, unsigned max_degree);
Rational random_small_rational(std::mt19937_64& rng);
// Nonzero integer in [-bound, bound].
long long random_nonzero_int(std::mt19937_64& rng, unsigned bound);

// Derives an independent engine for (seed, index, stream).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

struct AxiomCheckReport {
  unsigned trials = 0;
  unsigned max_degree = 0;
  std::uint64_t seed = 0;
  bool normalization_ok = false;
  unsigned locality_failures = 0;
  unsigned invariance_failures = 0;
  std::vector<std::string> failures;  // ordered by trial index

  bool all_passed() const {
    return normalization_ok && locality_failures == 0 && invariance_failures == 0;
  }

  friend bool operator==(const AxiomCheckReport&, const AxiomCheckReport&) = default;
};

// Checks the three defining conditions on seeded random inputs:
//   Normalization  psi(1) = 1
//   Locality       psi((a1^2 + a2^2 - 1) * q) = 0
//   Invariance     psi(h_u . p) = psi(p), plus h = -I
// Trials are independent, each owning its inputs, so they run across OpenMP
// workers when parallel is set; the report is identical either way.
AxiomCheckReport verify_axioms(unsigned trials, unsigned max_degree, std::uint64_t seed,
                               bool parallel = true);

}  // namespace circat
