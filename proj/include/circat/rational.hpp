#pragma once

#include <string>
#include <string_view>

#include "circat/bigint.hpp"

namespace circat {

// Exact rational number, always stored fully reduced with a positive
// denominator; zero is 0/1. Canonical storage makes operator== structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  // Normalizing constructor; throws std::domain_error if den == 0.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational embed(const BigInt& n) { return Rational(n); }

  Rational operator-() const;
  // Throws std::domain_error on division by zero.
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "a/b", or just "a" for integers.
  std::string to_string() const;
  // Parses "a", "-a", "a/b"; throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

 private:
  BigInt num_;
  BigInt den_;
};

}  // namespace circat
