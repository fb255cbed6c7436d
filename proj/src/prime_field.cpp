#include "circat/prime_field.hpp"

#include <stdexcept>

namespace circat {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // operands < 2^32, so the product fits in 64 bits
  return a * b % m;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1u;
  }
  return acc;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_odd_prime(std::uint64_t n) {
  if (n < 3 || (n & 1u) == 0) return false;
  if (n >= (std::uint64_t(1) << 32)) {
    throw std::invalid_argument("is_odd_prime: only moduli below 2^32 are supported");
  }
  // Bases 2, 7, 61 are deterministic for all n < 4'759'123'141.
  for (std::uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 32)) {
    throw std::invalid_argument("PrimeField: modulus must be below 2^32");
  }
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not an odd prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

PrimeFieldElement PrimeField::element(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint64_t>(r), p_};
}

PrimeFieldElement PrimeField::element(const BigInt& value) const {
  BigInt r = value % p_;
  if (r < 0) r += p_;
  return {r.convert_to<std::uint64_t>(), p_};
}

PrimeFieldElement PrimeField::zero() const { return {0, p_}; }
PrimeFieldElement PrimeField::one() const { return {1, p_}; }

namespace {

void require_same_field(PrimeFieldElement a, PrimeFieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw std::invalid_argument("PrimeFieldElement: operands from different fields (mod " +
                                std::to_string(a.modulus()) + " vs mod " +
                                std::to_string(b.modulus()) + ")");
  }
}

}  // namespace

PrimeFieldElement PrimeFieldElement::embed(const BigInt& n) const {
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return {r.convert_to<std::uint64_t>(), p_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("PrimeFieldElement: division by zero");
  return pow(p_ - 2);
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t exp) const {
  return {pow_mod(value_, exp, p_), p_};
}

PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b) {
  require_same_field(a, b);
  std::uint64_t s = a.value_ + b.value_;
  if (s >= a.p_) s -= a.p_;
  return {s, a.p_};
}

PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b) {
  require_same_field(a, b);
  std::uint64_t s = a.value_ + a.p_ - b.value_;
  if (s >= a.p_) s -= a.p_;
  return {s, a.p_};
}

PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b) {
  require_same_field(a, b);
  return {mul_mod(a.value_, b.value_, a.p_), a.p_};
}

PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b) {
  require_same_field(a, b);
  return a * b.inverse();
}

std::string PrimeFieldElement::to_string() const {
  return std::to_string(value_) + " (mod " + std::to_string(p_) + ")";
}

PrimeFieldElement rational_mod_p(const Rational& x, const PrimeField& field) {
  PrimeFieldElement den = field.element(x.den());
  if (den.is_zero()) {
    throw std::domain_error("rational_mod_p: denominator of " + x.to_string() +
                            " is divisible by " + std::to_string(field.modulus()));
  }
  return field.element(x.num()) * den.inverse();
}

}  // namespace circat
