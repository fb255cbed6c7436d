#include "circat/functional.hpp"

#include <algorithm>
#include <stdexcept>

#include "circat/reduce.hpp"
#include "circat/super_catalan.hpp"

namespace circat {

CircleSpec::CircleSpec(Rational a, Rational b, Rational r)
    : center_a(std::move(a)), center_b(std::move(b)), radius(std::move(r)) {
  if (radius.is_zero()) throw std::invalid_argument("CircleSpec: radius must be nonzero");
}

QPoly CircleSpec::generator() const {
  QPoly g;
  // (a1 - a)^2 + (a2 - b)^2 - r^2, expanded
  g.add_term({2, 0}, Rational(1));
  g.add_term({0, 2}, Rational(1));
  g.add_term({1, 0}, Rational(-2) * center_a);
  g.add_term({0, 1}, Rational(-2) * center_b);
  g.add_term({0, 0}, center_a * center_a + center_b * center_b - radius * radius);
  return g;
}

Rational psi_monomial(unsigned k, unsigned l) {
  if (k % 2 != 0 || l % 2 != 0) return Rational(0);
  return omega(k / 2, l / 2);
}

Rational psi(const QPoly& p) {
  Rational acc;
  for (const auto& [m, c] : p.terms()) acc += c * psi_monomial(m.k, m.l);
  return acc;
}

Rational psi_general(const CircleSpec& circle, const QPoly& p) {
  const Rational& a = circle.center_a;
  const Rational& b = circle.center_b;
  const Rational& r = circle.radius;
  Rational acc;
  for (const auto& [m, c] : p.terms()) {
    // psi((a + r*a1)^k (b + r*a2)^l), term by term; only even/even
    // inner exponents survive.
    Rational inner;
    for (unsigned s = 0; s <= m.k; s += 2) {
      for (unsigned t = 0; t <= m.l; t += 2) {
        Rational coeff = Rational(binomial(m.k, s) * binomial(m.l, t)) *
                         field_pow(a, m.k - s) * field_pow(b, m.l - t) *
                         field_pow(r, s + t);
        inner += coeff * omega(s / 2, t / 2);
      }
    }
    acc += c * inner;
  }
  return r * acc;
}

Rational psi_via_canonical(const QPoly& p) {
  return psi(canonicalize(p).rho);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// rng() % n is biased by at most 2^-50 for the tiny ranges used here and,
// unlike std::uniform_int_distribution, produces the same stream on every
// implementation.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index ^ splitmix64(stream))));
}

Rational random_small_rational(std::mt19937_64& rng) {
  long long num = static_cast<long long>(below(rng, 19)) - 9;
  long long den = 1 + static_cast<long long>(below(rng, 9));
  return Rational(BigInt(num), BigInt(den));
}

long long random_nonzero_int(std::mt19937_64& rng, unsigned bound) {
  long long magnitude = 1 + static_cast<long long>(below(rng, bound));
  return below(rng, 2) == 0 ? magnitude : -magnitude;
}

QPoly random_polynomial(std::mt19937_64& rng, unsigned max_degree) {
  QPoly p;
  unsigned terms = 1 + static_cast<unsigned>(below(rng, 8));
  for (unsigned i = 0; i < terms; ++i) {
    unsigned k = static_cast<unsigned>(below(rng, max_degree + 1));
    unsigned l = static_cast<unsigned>(below(rng, max_degree - k + 1));
    p.add_term({k, l}, random_small_rational(rng));
  }
  return p;
}

AxiomCheckReport verify_axioms(unsigned trials, unsigned max_degree, std::uint64_t seed,
                               bool parallel) {
  AxiomCheckReport report;
  report.trials = trials;
  report.max_degree = max_degree;
  report.seed = seed;
  report.normalization_ok = psi(QPoly::constant(Rational(1))) == Rational(1);
  if (!report.normalization_ok) report.failures.push_back("normalization: psi(1) != 1");

  const QPoly generator = circle_generator();
  std::vector<std::pair<unsigned, std::string>> failures;
  unsigned locality_failures = 0;
  unsigned invariance_failures = 0;

#pragma omp parallel for schedule(dynamic, 8) if (parallel) \
    reduction(+ : locality_failures, invariance_failures)
  for (long long i = 0; i < static_cast<long long>(trials); ++i) {
    const std::uint64_t idx = static_cast<std::uint64_t>(i);
    std::vector<std::pair<unsigned, std::string>> local;

    auto loc_rng = trial_rng(seed, idx, 0);
    QPoly q = random_polynomial(loc_rng, max_degree);
    if (!psi(generator * q).is_zero()) {
      ++locality_failures;
      local.emplace_back(idx, "locality: trial " + std::to_string(idx));
    }

    auto inv_rng = trial_rng(seed, idx, 1);
    QPoly p = random_polynomial(inv_rng, max_degree);
    Rational u(random_nonzero_int(inv_rng, 100));
    Rational reference = psi(p);
    if (psi(act(RotationElement<Rational>::parametric(u), p)) != reference) {
      ++invariance_failures;
      local.emplace_back(idx, "invariance: trial " + std::to_string(idx) + " at u = " + u.to_string());
    }
    if (psi(act(RotationElement<Rational>::minus_identity(), p)) != reference) {
      ++invariance_failures;
      local.emplace_back(idx, "invariance: trial " + std::to_string(idx) + " at -I");
    }

    if (!local.empty()) {
#pragma omp critical(circat_verify_axioms_failures)
      failures.insert(failures.end(), local.begin(), local.end());
    }
  }

  report.locality_failures = locality_failures;
  report.invariance_failures = invariance_failures;
  std::sort(failures.begin(), failures.end());
  for (auto& [idx, message] : failures) report.failures.push_back(std::move(message));
  return report;
}

}  // namespace circat
