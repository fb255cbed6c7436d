#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace circat {

// Arbitrary-precision signed integer. Factorial products for indices up to
// a few hundred stay well inside what cpp_int handles without tuning.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k), computed multiplicatively with exact
// stepwise division. C(n, k) = 0 for k > n.
BigInt binomial(unsigned n, unsigned k);

// base^exp for natural exponents; pow_nat(0, 0) = 1.
BigInt pow_nat(const BigInt& base, unsigned exp);

}  // namespace circat
