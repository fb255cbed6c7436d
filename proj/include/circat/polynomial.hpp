#pragma once

#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circat/bigint.hpp"
#include "circat/rational.hpp"

namespace circat {

// Exact field elements. zero()/one()/embed() are instance-derived so that
// fields carrying runtime state (a modulus) satisfy the concept too.
template <typename F>
concept FieldElement = requires(const F a, const F b, const BigInt& n) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero() } -> std::convertible_to<F>;
  { a.one() } -> std::convertible_to<F>;
  { a.embed(n) } -> std::convertible_to<F>;
};

// base^exp by square-and-multiply; exp == 0 yields the field's one.
template <FieldElement F>
F field_pow(F base, unsigned exp) {
  F acc = base.one();
  while (exp != 0) {
    if (exp & 1u) acc = acc * base;
    exp >>= 1u;
    if (exp != 0) base = base * base;
  }
  return acc;
}

// Exponent pair: alpha_1^k * alpha_2^l.
struct Monomial {
  unsigned k = 0;
  unsigned l = 0;

  unsigned degree() const { return k + l; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

template <FieldElement F>
struct AffinePoint {
  F x;
  F y;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// Sparse bivariate polynomial: finite map from exponent pairs to nonzero
// coefficients. Structural equality on the normalized term map is exact
// polynomial equality.
template <FieldElement F>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, F>;

  Polynomial() = default;

  static Polynomial monomial(Monomial m, const F& coeff) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
  }
  static Polynomial constant(const F& c) { return monomial({0, 0}, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Total degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const {
    std::optional<unsigned> d;
    for (const auto& [m, c] : terms_) {
      if (!d || m.degree() > *d) d = m.degree();
    }
    return d;
  }

  std::optional<F> coefficient(Monomial m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  // Adds c * alpha_1^(m.k) alpha_2^(m.l); cancellations drop the entry, so
  // no zero coefficient is ever stored.
  void add_term(Monomial m, const F& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        r.add_term({ma.k + mb.k, ma.l + mb.l}, ca * cb);
      }
    }
    return r;
  }

  Polynomial scale(const F& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, c * coeff);
    return r;
  }

  // The evaluation map at [x, y]; a ring homomorphism for a fixed point.
  F evaluate(const AffinePoint<F>& pt) const {
    F acc = pt.x.zero();
    for (const auto& [m, c] : terms_) {
      acc = acc + c * field_pow(pt.x, m.k) * field_pow(pt.y, m.l);
    }
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;

// 2x2 matrix over F acting by substitution. Row-vector convention:
// applying M to a point is [x, y] -> [x, y] * M.
template <FieldElement F>
struct RotationMatrix {
  F h11, h12, h21, h22;

  friend RotationMatrix operator*(const RotationMatrix& a, const RotationMatrix& b) {
    return {a.h11 * b.h11 + a.h12 * b.h21, a.h11 * b.h12 + a.h12 * b.h22,
            a.h21 * b.h11 + a.h22 * b.h21, a.h21 * b.h12 + a.h22 * b.h22};
  }

  F determinant() const { return h11 * h22 - h12 * h21; }
  RotationMatrix transpose() const { return {h11, h21, h12, h22}; }

  friend bool operator==(const RotationMatrix&, const RotationMatrix&) = default;
};

// Element of SO(2, F): either -I or the rational parametrization h_u.
// Parametric elements require 1 + u^2 != 0 (automatic over Q).
template <FieldElement F>
class RotationElement {
 public:
  static RotationElement minus_identity(F witness = F()) {
    return RotationElement(true, std::move(witness));
  }

  // Throws std::domain_error when 1 + u^2 = 0 in the field.
  static RotationElement parametric(F u) {
    F one = u.one();
    if ((one + u * u).is_zero()) {
      throw std::domain_error("RotationElement: 1 + u^2 = 0, h_u undefined");
    }
    return RotationElement(false, std::move(u));
  }

  bool is_minus_identity() const { return minus_identity_; }

  const F& parameter() const {
    if (minus_identity_) throw std::logic_error("RotationElement: -I has no parameter");
    return u_;
  }

  // Some element of the carrier field, for minting constants.
  const F& witness() const { return u_; }

 private:
  RotationElement(bool minus_identity, F u)
      : minus_identity_(minus_identity), u_(std::move(u)) {}

  bool minus_identity_;
  F u_;  // parameter for h_u; an arbitrary field witness for -I
};

// h_u = (1/(1+u^2)) [[1-u^2, -2u], [2u, 1-u^2]], and -I for the remaining
// rotation. Always orthonormal with determinant 1.
template <FieldElement F>
RotationMatrix<F> rotation_matrix(const RotationElement<F>& h) {
  if (h.is_minus_identity()) {
    F one = h.witness().one();
    F neg = -one;
    F z = one.zero();
    return {neg, z, z, neg};
  }
  const F& u = h.parameter();
  F one = u.one();
  F inv = one / (one + u * u);
  F diag = (one - u * u) * inv;
  F off = (one + one) * u * inv;
  return {diag, -off, off, diag};
}

// Substitution action of a matrix on a polynomial:
// pi(a1, a2) -> pi(h11 a1 + h21 a2, h12 a1 + h22 a2),
// expanded termwise with exact binomial coefficients. Every output term of
// a degree-(k+l) monomial input again has total degree k+l.
template <FieldElement F>
Polynomial<F> substitute_linear(const RotationMatrix<F>& m, const Polynomial<F>& p) {
  Polynomial<F> out;
  for (const auto& [mono, c] : p.terms()) {
    const unsigned k = mono.k;
    const unsigned l = mono.l;
    std::vector<F> pow11, pow21, pow12, pow22;
    pow11.reserve(k + 1);
    pow21.reserve(k + 1);
    pow12.reserve(l + 1);
    pow22.reserve(l + 1);
    F one = c.one();
    pow11.push_back(one);
    pow21.push_back(one);
    pow12.push_back(one);
    pow22.push_back(one);
    for (unsigned i = 1; i <= k; ++i) {
      pow11.push_back(pow11.back() * m.h11);
      pow21.push_back(pow21.back() * m.h21);
    }
    for (unsigned i = 1; i <= l; ++i) {
      pow12.push_back(pow12.back() * m.h12);
      pow22.push_back(pow22.back() * m.h22);
    }
    for (unsigned s = 0; s <= k; ++s) {
      for (unsigned t = 0; t <= l; ++t) {
        F coeff = c * c.embed(binomial(k, s) * binomial(l, t)) * pow11[s] *
                  pow21[k - s] * pow12[t] * pow22[l - t];
        out.add_term({s + t, (k - s) + (l - t)}, coeff);
      }
    }
  }
  return out;
}

template <FieldElement F>
Polynomial<F> act(const RotationElement<F>& h, const Polynomial<F>& p) {
  return substitute_linear(rotation_matrix(h), p);
}

// Right action on points: [x, y] * M.
template <FieldElement F>
AffinePoint<F> act_point(const AffinePoint<F>& pt, const RotationMatrix<F>& m) {
  return {m.h11 * pt.x + m.h21 * pt.y, m.h12 * pt.x + m.h22 * pt.y};
}

template <FieldElement F>
AffinePoint<F> act_point(const AffinePoint<F>& pt, const RotationElement<F>& h) {
  return act_point(pt, rotation_matrix(h));
}

}  // namespace circat
