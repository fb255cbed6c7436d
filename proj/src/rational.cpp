#include "circat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace circat {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("Rational: malformed text \"" + std::string(text) + "\""); };
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digits = [&]() -> BigInt {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
    return BigInt(std::string(text.substr(start, i - start)));
  };

  skip_ws();
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  BigInt num = digits();
  BigInt den = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = digits();
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in \"" + std::string(text) + "\"");
  }
  skip_ws();
  if (i != text.size()) fail();
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

}  // namespace circat
