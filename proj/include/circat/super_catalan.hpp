#pragma once

#include <string>
#include <vector>

#include "circat/bigint.hpp"
#include "circat/rational.hpp"

namespace circat {

// n!, memoized across calls.
BigInt factorial(unsigned n);

// Catalan number c_n = C(2n, n) / (n + 1); the division is checked exact.
BigInt catalan(unsigned n);

// Super Catalan number S(m, n) = (2m)!(2n)! / (m! n! (m+n)!). The quotient
// is always an integer; the implementation still asserts a zero remainder
// and throws std::logic_error if that ever failed.
BigInt super_catalan(unsigned m, unsigned n);

// Circular super Catalan number Omega(m, n) = S(m, n) / 4^(m+n), reduced.
Rational omega(unsigned m, unsigned n);

struct IdentityCheckReport {
  unsigned max_m = 0;
  unsigned max_n = 0;
  unsigned checked = 0;
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty(); }
};

// For every (m, n) in the range: integrality of S(m, n) (exact division,
// zero remainder), 4S(m,n) = S(m+1,n) + S(m,n+1), and the Pascal-like
// property Omega(m,n) = Omega(m+1,n) + Omega(m,n+1).
IdentityCheckReport check_identities(unsigned max_m, unsigned max_n);

// The algebraic interpretation 2S(m,n) = psi_{2,[0,0]}(a1^2m a2^2n),
// computed along two routes that must coincide.
struct InterpretResult {
  Rational via_functional;     // psi_{2,[0,0]}(alpha_1^2m alpha_2^2n)
  BigInt doubled_super_catalan;  // 2 * S(m, n)

  bool consistent() const {
    return via_functional.is_integer() && via_functional.num() == doubled_super_catalan;
  }
};

InterpretResult interpret(unsigned m, unsigned n);

}  // namespace circat
