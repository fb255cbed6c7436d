#include "circat/super_catalan.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "circat/functional.hpp"

namespace circat {

namespace {

std::mutex factorial_mutex;
std::vector<BigInt> factorial_cache = {BigInt(1)};  // 0! = 1

// Exact quotient; throws if the division leaves a remainder.
BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error(std::string(what) + ": division is not exact");
  return q;
}

}  // namespace

BigInt factorial(unsigned n) {
  std::lock_guard<std::mutex> lock(factorial_mutex);
  while (factorial_cache.size() <= n) {
    factorial_cache.push_back(factorial_cache.back() * static_cast<unsigned>(factorial_cache.size()));
  }
  return factorial_cache[n];
}

BigInt catalan(unsigned n) {
  return exact_quotient(binomial(2 * n, n), BigInt(n + 1), "catalan");
}

BigInt super_catalan(unsigned m, unsigned n) {
  BigInt num = factorial(2 * m) * factorial(2 * n);
  BigInt den = factorial(m) * factorial(n) * factorial(m + n);
  return exact_quotient(num, den, "super_catalan");
}

Rational omega(unsigned m, unsigned n) {
  return Rational(super_catalan(m, n), pow_nat(BigInt(4), m + n));
}

IdentityCheckReport check_identities(unsigned max_m, unsigned max_n) {
  IdentityCheckReport report;
  report.max_m = max_m;
  report.max_n = max_n;
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) {
      ++report.checked;
      auto tag = [m, n](const char* what) {
        return std::string(what) + " failed at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
      };
      // integrality, checked against the raw factorial quotient
      BigInt num = factorial(2 * m) * factorial(2 * n);
      BigInt den = factorial(m) * factorial(n) * factorial(m + n);
      BigInt s, r;
      boost::multiprecision::divide_qr(num, den, s, r);
      if (r != 0) {
        report.failures.push_back(tag("integrality of S"));
        continue;
      }
      if (4 * s != super_catalan(m + 1, n) + super_catalan(m, n + 1)) {
        report.failures.push_back(tag("4S(m,n) = S(m+1,n) + S(m,n+1)"));
      }
      if (omega(m, n) != omega(m + 1, n) + omega(m, n + 1)) {
        report.failures.push_back(tag("Omega(m,n) = Omega(m+1,n) + Omega(m,n+1)"));
      }
    }
  }
  return report;
}

InterpretResult interpret(unsigned m, unsigned n) {
  CircleSpec circle(Rational(0), Rational(0), Rational(2));
  QPoly monomial = QPoly::monomial({2 * m, 2 * n}, Rational(1));
  return {psi_general(circle, monomial), 2 * super_catalan(m, n)};
}

}  // namespace circat
