#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "circat/polynomial.hpp"

namespace circat {

// Largest exponent the text form accepts.
inline constexpr unsigned long long kMaxParsedExponent = 1'000'000;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  // 0-based offset into the source text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive; x is alpha_1, y is alpha_2):
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff ('*' atom)* | atom ('*' atom)*
//   atom  := ('x'|'y') ('^' nat)?
//   coeff := nat ('/' nat)?
// Throws ParseError with the offending position and the expected tokens.
QPoly parse_poly(std::string_view text);

// Canonical text form: terms by descending total degree, then descending
// x-exponent; coefficients as "a/b". parse_poly(print_poly(p)) == p.
std::string print_poly(const QPoly& p);

// Source text together with its parse, for command echoing.
struct PolyExpr {
  std::string source;
  QPoly poly;

  static PolyExpr parse(std::string_view text) {
    return {std::string(text), parse_poly(text)};
  }
};

}  // namespace circat
