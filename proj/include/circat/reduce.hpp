#pragma once

#include "circat/polynomial.hpp"
#include "circat/rational.hpp"

namespace circat {

// Remainder of a polynomial modulo <alpha_1^2 + alpha_2^2 - 1>, in the shape
// rho(alpha_1) + alpha_2 * omega(alpha_1). Both components are stored as
// bivariate polynomials whose terms all have l = 0.
template <FieldElement F>
struct CanonicalForm {
  Polynomial<F> rho;
  Polynomial<F> omega;

  bool is_zero() const { return rho.is_zero() && omega.is_zero(); }

  Polynomial<F> to_polynomial() const {
    Polynomial<F> out = rho;
    for (const auto& [m, c] : omega.terms()) out.add_term({m.k, m.l + 1}, c);
    return out;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonical reduction by the closed-form rewrite alpha_2^2 -> 1 - alpha_1^2:
// each term splits l into alpha_2^(l mod 2) * (1 - alpha_1^2)^(l/2), expanded
// with alternating binomial coefficients. The difference p - (rho + a2*omega)
// is an exact multiple of the generator, and the map is idempotent.
template <FieldElement F>
CanonicalForm<F> canonicalize(const Polynomial<F>& p) {
  CanonicalForm<F> out;
  for (const auto& [mono, c] : p.terms()) {
    const unsigned half = mono.l / 2;
    Polynomial<F>& target = (mono.l % 2 == 1) ? out.omega : out.rho;
    for (unsigned j = 0; j <= half; ++j) {
      BigInt b = binomial(half, j);
      if (j % 2 == 1) b = -b;
      target.add_term({mono.k + 2 * j, 0}, c * c.embed(b));
    }
  }
  return out;
}

// Membership in <alpha_1^2 + alpha_2^2 - 1>; over Q this is equivalent to
// vanishing identically on the unit circle.
template <FieldElement F>
bool is_ideal_member(const Polynomial<F>& p) {
  return canonicalize(p).is_zero();
}

// alpha_1^2 + alpha_2^2 - 1 over Q.
QPoly circle_generator();

// The rational circle point [(1-u^2)/(1+u^2), 2u/(1+u^2)].
AffinePoint<Rational> unit_circle_point(const Rational& u);

// True iff p evaluates to zero at the points from u = 1..count and at
// [-1, 0] (the one point the parametrization misses).
bool vanishes_on_sample(const QPoly& p, unsigned count);

}  // namespace circat
