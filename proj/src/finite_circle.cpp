#include "circat/finite_circle.hpp"

#include <algorithm>
#include <stdexcept>

#include "circat/functional.hpp"

namespace circat {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) acc = acc * base % m;
    base = base * base % m;
    exp >>= 1u;
  }
  return acc;
}

void require_enumerable(std::uint32_t p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("enumerate_circle: " + std::to_string(p) + " is not an odd prime");
  }
  if (p >= kEnumerationBudget) {
    throw std::out_of_range("enumerate_circle: prime " + std::to_string(p) +
                            " exceeds the enumeration budget 2^20");
  }
}

// Table of square roots: for each residue v, how many y in [0, p) square to
// v (0, 1 or 2) and the smaller such y. Distinct y in [0, (p-1)/2] have
// distinct squares, so the fill loop writes each slot exactly once.
struct SquareRootTable {
  std::vector<std::uint8_t> count;
  std::vector<std::uint32_t> small_root;
};

SquareRootTable build_square_root_table(std::uint32_t p, bool parallel) {
  SquareRootTable table;
  table.count.assign(p, 0);
  table.small_root.assign(p, 0);
  const long long half = (static_cast<long long>(p) - 1) / 2;
#pragma omp parallel for schedule(static) if (parallel)
  for (long long y = 0; y <= half; ++y) {
    std::uint64_t v = static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(y) % p;
    table.count[v] = (y == 0) ? 1 : 2;
    table.small_root[v] = static_cast<std::uint32_t>(y);
  }
  return table;
}

std::uint32_t circle_target(std::uint32_t x, std::uint32_t p) {
  std::uint64_t x2 = static_cast<std::uint64_t>(x) * x % p;
  return static_cast<std::uint32_t>((1 + p - x2) % p);
}

}  // namespace

int legendre(std::int64_t a, std::uint32_t p) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

FiniteCircle enumerate_circle_serial(std::uint32_t p) {
  require_enumerable(p);
  SquareRootTable table = build_square_root_table(p, false);
  FiniteCircle circle;
  circle.modulus = p;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t t = circle_target(x, p);
    if (table.count[t] == 0) continue;
    std::uint32_t y = table.small_root[t];
    circle.points.emplace_back(x, y);
    if (table.count[t] == 2) circle.points.emplace_back(x, p - y);
  }
  return circle;
}

FiniteCircle enumerate_circle(std::uint32_t p) {
  require_enumerable(p);
  SquareRootTable table = build_square_root_table(p, true);

  // count / prefix / fill keeps the point order independent of scheduling
  std::vector<std::uint32_t> offsets(static_cast<std::size_t>(p) + 1, 0);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < static_cast<long long>(p); ++x) {
    offsets[static_cast<std::size_t>(x) + 1] =
        table.count[circle_target(static_cast<std::uint32_t>(x), p)];
  }
  for (std::size_t x = 0; x < p; ++x) offsets[x + 1] += offsets[x];

  FiniteCircle circle;
  circle.modulus = p;
  circle.points.resize(offsets[p]);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < static_cast<long long>(p); ++x) {
    std::uint32_t t = circle_target(static_cast<std::uint32_t>(x), p);
    if (table.count[t] == 0) continue;
    std::uint32_t y = table.small_root[t];
    std::size_t at = offsets[static_cast<std::size_t>(x)];
    circle.points[at] = {static_cast<std::uint32_t>(x), y};
    if (table.count[t] == 2) circle.points[at + 1] = {static_cast<std::uint32_t>(x), p - y};
  }
  return circle;
}

std::uint64_t circle_power_sum_serial(const FiniteCircle& circle, unsigned k, unsigned l) {
  const std::uint32_t p = circle.modulus;
  std::uint64_t sum = 0;  // each summand < p <= 2^20 and |points| <= p+1: no overflow
  for (const auto& [x, y] : circle.points) {
    sum += pow_mod(x, k, p) * pow_mod(y, l, p) % p;
  }
  return sum % p;
}

std::uint64_t circle_power_sum(const FiniteCircle& circle, unsigned k, unsigned l) {
  const std::uint32_t p = circle.modulus;
  const long long n = static_cast<long long>(circle.points.size());
  std::uint64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (long long i = 0; i < n; ++i) {
    const auto& [x, y] = circle.points[static_cast<std::size_t>(i)];
    sum += pow_mod(x, k, p) * pow_mod(y, l, p) % p;
  }
  return sum % p;
}

PrimeFieldElement psi_finite(const FiniteCircle& circle, unsigned k, unsigned l) {
  const std::uint32_t p = circle.modulus;
  if (k + l >= p - 1) {
    throw std::out_of_range("psi_finite: k + l = " + std::to_string(k + l) +
                            " is outside the admissible range [0, " + std::to_string(p - 1) + ")");
  }
  std::uint64_t sum = circle_power_sum(circle, k, l);
  // -(-1/p) * sum
  std::uint64_t negated = (p - sum) % p;
  std::uint64_t value = legendre(-1, p) == 1 ? negated : sum;
  return PrimeField(p).element(static_cast<std::int64_t>(value));
}

PrimeFieldElement psi_finite(std::uint32_t p, unsigned k, unsigned l) {
  require_enumerable(p);
  return psi_finite(enumerate_circle(p), k, l);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parametrized_circle_points(std::uint32_t p) {
  require_enumerable(p);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  for (std::uint64_t u = 0; u < p; ++u) {
    std::uint64_t u2 = u * u % p;
    std::uint64_t d = (1 + u2) % p;
    if (d == 0) continue;
    std::uint64_t inv = pow_mod(d, p - 2, p);
    std::uint64_t x = (1 + p - u2) % p * inv % p;
    std::uint64_t y = 2 * u % p * inv % p;
    points.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
  }
  points.emplace_back(p - 1, 0);
  std::sort(points.begin(), points.end());
  return points;
}

CrossCheckReport cross_check(std::uint32_t p) {
  FiniteCircle circle = enumerate_circle(p);
  PrimeField field(p);

  CrossCheckReport report;
  report.modulus = p;
  for (unsigned k = 0; k + 1 < p; ++k) {
    for (unsigned l = 0; k + l + 1 < p; ++l) {
      report.entries.push_back({k, l, 0, 0, false});
    }
  }
  report.checked = static_cast<unsigned>(report.entries.size());

  // expected side first (serial: factorial cache + rational reduction),
  // then the point sums across workers
  for (auto& entry : report.entries) {
    entry.expected = rational_mod_p(psi_monomial(entry.k, entry.l), field).value();
  }
  const long long n = static_cast<long long>(report.entries.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    auto& entry = report.entries[static_cast<std::size_t>(i)];
    entry.got = psi_finite(circle, entry.k, entry.l).value();
    entry.ok = entry.got == entry.expected;
  }
  for (const auto& entry : report.entries) {
    if (!entry.ok) ++report.mismatch_count;
  }
  return report;
}

}  // namespace circat
