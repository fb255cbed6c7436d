// Serial-vs-OpenMP comparison for the data-parallel kernels: finite circle
// enumeration, character power sums, and the randomized axiom verifier.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circat/finite_circle.hpp"
#include "circat/functional.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename Fn>
double time_seconds(Fn&& fn) {
  auto start = clock_type::now();
  fn();
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool agree) {
  std::printf("%-38s %9.3fs %9.3fs %7.2fx   %s\n", name.c_str(), serial_s, parallel_s,
              serial_s / parallel_s, agree ? "outputs agree" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif
  std::printf("%-38s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

  {
    // largest prime below the enumeration budget
    const std::uint32_t p = 1048573;
    circat::FiniteCircle serial, parallel;
    double ts = time_seconds([&] { serial = circat::enumerate_circle_serial(p); });
    double tp = time_seconds([&] { parallel = circat::enumerate_circle(p); });
    report("enumerate_circle p=1048573", ts, tp, serial.points == parallel.points);
  }

  {
    const std::uint32_t p = 65521;
    circat::FiniteCircle circle = circat::enumerate_circle(p);
    std::uint64_t sum_serial = 0, sum_parallel = 0;
    double ts = time_seconds([&] {
      for (unsigned k = 0; k <= 40; k += 2) {
        for (unsigned l = 0; l <= 40; l += 2) {
          sum_serial += circat::circle_power_sum_serial(circle, k, l);
        }
      }
    });
    double tp = time_seconds([&] {
      for (unsigned k = 0; k <= 40; k += 2) {
        for (unsigned l = 0; l <= 40; l += 2) {
          sum_parallel += circat::circle_power_sum(circle, k, l);
        }
      }
    });
    report("power sums p=65521, k,l <= 40", ts, tp, sum_serial == sum_parallel);
  }

  {
    circat::AxiomCheckReport serial, parallel;
    double ts = time_seconds([&] { serial = circat::verify_axioms(300, 10, 7, false); });
    double tp = time_seconds([&] { parallel = circat::verify_axioms(300, 10, 7, true); });
    report("verify_axioms trials=300 deg=10", ts, tp, serial == parallel);
  }

  return 0;
}
