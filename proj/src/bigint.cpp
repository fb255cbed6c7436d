#include "circat/bigint.hpp"

#include <stdexcept>

namespace circat {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  // Each partial product C(n-k+i, i) is an integer, so the division is exact.
  for (unsigned i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

BigInt pow_nat(const BigInt& base, unsigned exp) {
  BigInt acc = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return acc;
}

}  // namespace circat
