// Acceptance suite: each criterion prints one pass/fail line and the suite
// exits nonzero if any fails. All checks are exact identities; the time
// budgets are enforced as stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "circat/finite_circle.hpp"
#include "circat/functional.hpp"
#include "circat/parser.hpp"
#include "circat/prime_field.hpp"
#include "circat/reduce.hpp"
#include "circat/super_catalan.hpp"
#include "cli_driver.hpp"
#include "oracle.hpp"

namespace {

using namespace circat;
using circat::testing::divide_by_circle_generator;
using circat::testing::run_cli;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  auto start = std::chrono::steady_clock::now();
  body(outcome);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_budget = budget_seconds <= 0.0 || elapsed < budget_seconds;
  bool pass = outcome.pass && in_budget;
  if (!pass) ++failures;

  std::printf("criterion %d: %-58s %s (%.3fs", number, name.c_str(), pass ? "PASS" : "FAIL",
              elapsed);
  if (budget_seconds > 0.0) std::printf(" / budget %gs", budget_seconds);
  std::printf(")\n");
  if (!outcome.pass) std::printf("  first failure: %s\n", outcome.detail.c_str());
  if (!in_budget) std::printf("  over time budget\n");
}

QPoly monomial_poly(unsigned k, unsigned l) {
  return QPoly::monomial({k, l}, Rational(1));
}

void criterion_super_catalan(Outcome& out) {
  for (unsigned m = 0; m <= 20; ++m) {
    for (unsigned n = 0; n <= 20; ++n) {
      BigInt num = factorial(2 * m) * factorial(2 * n);
      BigInt den = factorial(m) * factorial(n) * factorial(m + n);
      BigInt s, r;
      boost::multiprecision::divide_qr(num, den, s, r);
      out.require(r == 0, "S(" + std::to_string(m) + "," + std::to_string(n) + ") not integral");
      out.require(4 * s == super_catalan(m + 1, n) + super_catalan(m, n + 1),
                  "4S = S+S fails at (" + std::to_string(m) + "," + std::to_string(n) + ")");
      out.require(omega(m, n) == omega(m + 1, n) + omega(m, n + 1),
                  "Pascal-like Omega identity fails at (" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
    }
  }
  for (unsigned n = 0; n <= 20; ++n) {
    out.require(super_catalan(1, n) == 2 * catalan(n),
                "S(1,n) = 2c_n fails at n = " + std::to_string(n));
  }
}

void criterion_axioms(Outcome& out) {
  out.require(psi(QPoly::constant(Rational(1))) == Rational(1), "normalization");

  const QPoly generator = circle_generator();
  for (unsigned i = 0; i < 1000; ++i) {
    auto rng = trial_rng(42, i, 0);
    QPoly q = random_polynomial(rng, 12);
    out.require(psi(generator * q).is_zero(), "locality trial " + std::to_string(i));
  }

  for (unsigned i = 0; i < 100; ++i) {
    auto rng = trial_rng(43, i, 1);
    QPoly p = random_polynomial(rng, 12);
    Rational u(random_nonzero_int(rng, 100));
    Rational reference = psi(p);
    out.require(psi(act(RotationElement<Rational>::parametric(u), p)) == reference,
                "invariance trial " + std::to_string(i));
    out.require(psi(act(RotationElement<Rational>::minus_identity(), p)) == reference,
                "-I invariance trial " + std::to_string(i));
  }
}

void criterion_recurrences(Outcome& out) {
  for (unsigned m = 1; m <= 50; ++m) {
    out.require(Rational(2 * m) * psi_monomial(2 * m, 0) ==
                    Rational(2 * m - 1) * psi_monomial(2 * m - 2, 0),
                "first-order recurrence fails at m = " + std::to_string(m));
    out.require(psi_monomial(2 * m - 1, 1) == Rational(0),
                "psi(x^(2m-1) y) != 0 at m = " + std::to_string(m));
  }
}

void criterion_reduction(Outcome& out) {
  const QPoly generator = circle_generator();
  for (unsigned i = 0; i < 500; ++i) {
    auto rng = trial_rng(44, i, 0);
    QPoly p = random_polynomial(rng, 12);
    CanonicalForm<Rational> cf = canonicalize(p);

    QPoly diff = p - cf.to_polynomial();
    auto division = divide_by_circle_generator(diff);
    out.require(division.remainder.is_zero() && division.quotient * generator == diff,
                "p - canon(p) not an exact multiple, trial " + std::to_string(i));

    out.require(psi(p) == psi_via_canonical(p),
                "psi and canonical route disagree, trial " + std::to_string(i));

    out.require(is_ideal_member(p) == vanishes_on_sample(p, 13),
                "membership/sampling disagreement, trial " + std::to_string(i));
    if (i % 25 == 0) {
      QPoly member = generator * p;
      out.require(is_ideal_member(member) && vanishes_on_sample(member, 13),
                  "constructed member rejected, trial " + std::to_string(i));
    }
  }
}

void criterion_finite_field_bridge(Outcome& out) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    CrossCheckReport report = cross_check(p);
    out.require(report.checked == (p - 1) * p / 2,
                "admissible range not exhausted at p = " + std::to_string(p));
    out.require(report.all_passed(), "mismatch at p = " + std::to_string(p));
  }
}

void criterion_interpretation(Outcome& out) {
  for (unsigned m = 0; m <= 10; ++m) {
    for (unsigned n = 0; n <= 10; ++n) {
      InterpretResult result = interpret(m, n);
      out.require(result.consistent(), "interpretation fails at (" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
    }
  }
}

void criterion_general_circles(Outcome& out) {
  unsigned done = 0;
  std::uint64_t draw = 0;
  while (done < 100) {
    auto rng = trial_rng(45, draw++, 0);
    Rational r = random_small_rational(rng);
    if (r.is_zero()) continue;
    CircleSpec circle(random_small_rational(rng), random_small_rational(rng), r);
    out.require(psi_general(circle, QPoly::constant(Rational(1))) == r,
                "normalization to r fails, trial " + std::to_string(done));
    QPoly q = random_polynomial(rng, 8);
    out.require(psi_general(circle, q * circle.generator()) == Rational(0),
                "translated locality fails, trial " + std::to_string(done));
    ++done;
  }
}

void criterion_cli(Outcome& out) {
  for (unsigned i = 0; i < 200; ++i) {
    auto rng = trial_rng(46, i, 0);
    QPoly p = random_polynomial(rng, 9);
    out.require(parse_poly(print_poly(p)) == p, "round trip fails at trial " + std::to_string(i));
  }

  auto pass_case = run_cli("psi --expect 1/8 \"x^2*y^2\"");
  out.require(pass_case.exit_code == 0, "pass case exit code != 0");
  out.require(pass_case.out == "1/8\nexpect 1/8: pass\n", "pass case output");

  auto fail_case = run_cli("psi --expect 1/7 \"x^2*y^2\"");
  out.require(fail_case.exit_code == 1, "check-failure case exit code != 1");

  out.require(run_cli("psi --bogus-flag \"x\"").exit_code == 2, "unknown flag exit code != 2");
  out.require(run_cli("psi \"x + * y\"").exit_code == 2, "malformed expression exit code != 2");
  out.require(run_cli("ffcheck --prime 9").exit_code == 2, "composite prime exit code != 2");
}

}  // namespace

int main() {
  run_criterion(1, "super Catalan identity suite (0 <= m,n <= 20)", 1.0, criterion_super_catalan);
  run_criterion(2, "functional axioms (1000 locality / 100 invariance trials)", 10.0,
                criterion_axioms);
  run_criterion(3, "uniqueness-proof recurrences (m <= 50)", 1.0, criterion_recurrences);
  run_criterion(4, "canonical reduction on 500 seeded polynomials", 10.0, criterion_reduction);
  run_criterion(5, "finite-field bridge, exhaustive for p in {5..23}", 5.0,
                criterion_finite_field_bridge);
  run_criterion(6, "2S(m,n) interpretation via two routes (m,n <= 10)", 1.0,
                criterion_interpretation);
  run_criterion(7, "general-circle normalization and locality (100 tuples)", 5.0,
                criterion_general_circles);
  run_criterion(8, "CLI round trip and exit-code contract", 0.0, criterion_cli);

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
