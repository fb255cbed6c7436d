#pragma once

#include <cstdint>
#include <string>

#include "circat/bigint.hpp"
#include "circat/rational.hpp"

namespace circat {

// Deterministic primality test for n < 2^32 (Miller-Rabin, bases 2, 7, 61).
bool is_odd_prime(std::uint64_t n);

class PrimeFieldElement;

// The field F_p for an odd prime p. Construction verifies primality;
// moduli >= 2^32 are rejected outright.
class PrimeField {
 public:
  // Throws std::invalid_argument unless p is an odd prime below 2^32.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }

  PrimeFieldElement element(std::int64_t value) const;
  PrimeFieldElement element(const BigInt& value) const;
  PrimeFieldElement zero() const;
  PrimeFieldElement one() const;

 private:
  std::uint32_t p_;
};

// Residue in [0, p). Elements of distinct fields never mix: arithmetic on
// mismatched moduli throws std::invalid_argument.
class PrimeFieldElement {
 public:
  std::uint64_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  PrimeFieldElement zero() const { return {0, p_}; }
  PrimeFieldElement one() const { return {1, p_}; }
  PrimeFieldElement embed(const BigInt& n) const;

  PrimeFieldElement operator-() const { return {value_ == 0 ? 0 : p_ - value_, p_}; }
  // Throws std::domain_error on zero.
  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t exp) const;

  friend PrimeFieldElement operator+(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator-(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator*(PrimeFieldElement a, PrimeFieldElement b);
  friend PrimeFieldElement operator/(PrimeFieldElement a, PrimeFieldElement b);

  friend bool operator==(PrimeFieldElement a, PrimeFieldElement b) = default;

  // "v (mod p)"
  std::string to_string() const;

 private:
  friend class PrimeField;
  PrimeFieldElement(std::uint64_t value, std::uint32_t p) : value_(value), p_(p) {}

  std::uint64_t value_;
  std::uint32_t p_;
};

// Reduction of a rational to F_p: num * den^-1 mod p. Throws
// std::domain_error when p divides the denominator.
PrimeFieldElement rational_mod_p(const Rational& x, const PrimeField& field);

}  // namespace circat
