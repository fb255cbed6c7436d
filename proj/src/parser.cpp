#include "circat/parser.hpp"

#include <algorithm>
#include <cctype>

namespace circat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  QPoly parse() {
    QPoly poly;
    skip_ws();
    int sign = consume_sign();
    poly = poly + parse_term(sign);
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') {
        fail("expected '+', '-', or end of input");
      }
      ++pos_;
      skip_ws();
      poly = poly + parse_term(c == '-' ? -1 : 1);
      skip_ws();
    }
    return poly;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string seen = at_end() ? "end of input" : "'" + std::string(1, src_[pos_]) + "'";
    throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + expected +
                         ", found " + seen,
                     pos_);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  int consume_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      int sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      return sign;
    }
    return 1;
  }

  bool at_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  BigInt parse_natural_big() {
    if (!at_digit()) fail("expected a digit");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return BigInt(std::string(src_.substr(start, pos_ - start)));
  }

  unsigned long long parse_exponent() {
    std::size_t at = pos_;
    if (!at_digit()) fail("expected a digit");
    unsigned long long value = 0;
    while (at_digit()) {
      value = value * 10 + static_cast<unsigned long long>(peek() - '0');
      if (value > kMaxParsedExponent) {
        throw ParseError("exponent at position " + std::to_string(at) + " exceeds " +
                             std::to_string(kMaxParsedExponent),
                         at);
      }
      ++pos_;
    }
    return value;
  }

  // coeff := nat ('/' nat); signs belong to the expression level.
  Rational parse_coeff() {
    BigInt num = parse_natural_big();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      BigInt den = parse_natural_big();
      if (den == 0) {
        throw ParseError("zero denominator at position " + std::to_string(at), at);
      }
      return Rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
  }

  // atom := ('x'|'y') ('^' nat)?
  void parse_atom(unsigned long long& k, unsigned long long& l) {
    if (at_end() || (peek() != 'x' && peek() != 'y')) fail("expected 'x' or 'y'");
    char var = peek();
    ++pos_;
    skip_ws();
    unsigned long long exp = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exp = parse_exponent();
    }
    (var == 'x' ? k : l) += exp;
  }

  QPoly parse_term(int sign) {
    std::size_t term_at = pos_;
    Rational coeff(1);
    unsigned long long k = 0;
    unsigned long long l = 0;
    if (at_digit()) {
      coeff = parse_coeff();
    } else {
      parse_atom(k, l);
    }
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      parse_atom(k, l);
      skip_ws();
    }
    if (k > kMaxParsedExponent || l > kMaxParsedExponent) {
      throw ParseError("combined exponent of term at position " + std::to_string(term_at) +
                           " exceeds " + std::to_string(kMaxParsedExponent),
                       term_at);
    }
    if (sign < 0) coeff = -coeff;
    return QPoly::monomial({static_cast<unsigned>(k), static_cast<unsigned>(l)}, coeff);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  if (m.k > 0) {
    out += "x";
    if (m.k > 1) out += "^" + std::to_string(m.k);
  }
  if (m.l > 0) {
    if (!out.empty()) out += "*";
    out += "y";
    if (m.l > 1) out += "^" + std::to_string(m.l);
  }
  return out;
}

}  // namespace

QPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string print_poly(const QPoly& p) {
  if (p.is_zero()) return "0";

  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.k > b.first.k;
  });

  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool negative = c.sign() < 0;
    Rational magnitude = negative ? -c : c;
    std::string vars = monomial_text(m);
    std::string body;
    if (vars.empty()) {
      body = magnitude.to_string();
    } else if (magnitude.is_one()) {
      body = vars;
    } else {
      body = magnitude.to_string() + "*" + vars;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace circat
