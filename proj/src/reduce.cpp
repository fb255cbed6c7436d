#include "circat/reduce.hpp"

namespace circat {

QPoly circle_generator() {
  QPoly g;
  g.add_term({2, 0}, Rational(1));
  g.add_term({0, 2}, Rational(1));
  g.add_term({0, 0}, Rational(-1));
  return g;
}

AffinePoint<Rational> unit_circle_point(const Rational& u) {
  Rational u2 = u * u;
  Rational d = Rational(1) + u2;  // never zero over Q
  return {(Rational(1) - u2) / d, (Rational(2) * u) / d};
}

bool vanishes_on_sample(const QPoly& p, unsigned count) {
  for (unsigned u = 1; u <= count; ++u) {
    if (!p.evaluate(unit_circle_point(Rational(u))).is_zero()) return false;
  }
  return p.evaluate({Rational(-1), Rational(0)}).is_zero();
}

}  // namespace circat
