// circat: exact circular integral functionals, super Catalan numbers, and
// the finite-field cross-checks, behind one command-line surface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circat/finite_circle.hpp"
#include "circat/functional.hpp"
#include "circat/parser.hpp"
#include "circat/prime_field.hpp"
#include "circat/reduce.hpp"
#include "circat/super_catalan.hpp"

namespace {

using circat::Rational;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  bool json = false;
  bool csv = false;
  std::string file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts, bool with_csv) {
  cmd->add_flag("--json", opts.json, "emit a single JSON document");
  if (with_csv) {
    auto* csv = cmd->add_flag("--csv", opts.csv, "emit CSV");
    csv->excludes("--json");
  }
  cmd->add_option("--output", opts.file, "write results to FILE instead of stdout");
}

// Runs fn against stdout or --output FILE.
template <typename Fn>
int with_output(const OutputOptions& opts, Fn&& fn) {
  if (opts.file.empty()) return fn(std::cout);
  std::ofstream out(opts.file);
  if (!out) {
    std::cerr << "error: cannot open '" << opts.file << "' for writing\n";
    return kExitUsage;
  }
  return fn(out);
}

circat::CircleSpec parse_circle_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 3) {
    throw std::invalid_argument("--circle expects \"r,a,b\", got \"" + text + "\"");
  }
  Rational r = Rational::parse(parts[0]);
  Rational a = Rational::parse(parts[1]);
  Rational b = Rational::parse(parts[2]);
  return {a, b, r};
}

struct PsiArgs {
  std::string expr;
  std::string circle;
  std::string expect;
  OutputOptions out;
};

int run_psi(const PsiArgs& args) {
  circat::PolyExpr input = circat::PolyExpr::parse(args.expr);
  bool unit = args.circle.empty();
  circat::CircleSpec circle = unit ? circat::CircleSpec::unit() : parse_circle_flag(args.circle);
  Rational value = unit ? circat::psi(input.poly) : circat::psi_general(circle, input.poly);

  bool has_expect = !args.expect.empty();
  Rational expected = has_expect ? Rational::parse(args.expect) : Rational(0);
  bool pass = !has_expect || value == expected;

  int rc = with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "psi";
      doc["expr"] = input.source;
      if (!unit) {
        doc["circle"] = {{"r", circle.radius.to_string()},
                         {"a", circle.center_a.to_string()},
                         {"b", circle.center_b.to_string()}};
      }
      doc["result"] = value.to_string();
      if (has_expect) {
        doc["expected"] = expected.to_string();
        doc["pass"] = pass;
      }
      os << doc.dump(2) << "\n";
    } else {
      os << value.to_string() << "\n";
      if (has_expect) {
        os << "expect " << expected.to_string() << ": " << (pass ? "pass" : "fail") << "\n";
      }
    }
    return kExitOk;
  });
  if (rc != kExitOk) return rc;
  return pass ? kExitOk : kExitCheckFailed;
}

struct ReduceArgs {
  std::string expr;
  OutputOptions out;
};

int run_reduce(const ReduceArgs& args) {
  circat::PolyExpr input = circat::PolyExpr::parse(args.expr);
  auto canonical = circat::canonicalize(input.poly);
  return with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "reduce";
      doc["expr"] = input.source;
      doc["rho"] = circat::print_poly(canonical.rho);
      doc["omega"] = circat::print_poly(canonical.omega);
      os << doc.dump(2) << "\n";
    } else {
      os << "rho = " << circat::print_poly(canonical.rho) << "\n";
      os << "omega = " << circat::print_poly(canonical.omega) << "\n";
    }
    return kExitOk;
  });
}

struct TableArgs {
  unsigned max_m = 0;
  unsigned max_n = 0;
  bool emit_omega = false;
  OutputOptions out;
};

int run_table(const TableArgs& args) {
  std::vector<std::vector<std::string>> grid(args.max_m + 1);
  for (unsigned m = 0; m <= args.max_m; ++m) {
    for (unsigned n = 0; n <= args.max_n; ++n) {
      grid[m].push_back(args.emit_omega ? circat::omega(m, n).to_string()
                                        : circat::super_catalan(m, n).str());
    }
  }
  return with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "table";
      doc["kind"] = args.emit_omega ? "omega" : "S";
      doc["max_m"] = args.max_m;
      doc["max_n"] = args.max_n;
      doc["grid"] = grid;
      os << doc.dump(2) << "\n";
    } else {
      const char sep = args.out.csv ? ',' : '\t';
      os << "m";
      for (unsigned n = 0; n <= args.max_n; ++n) os << sep << n;
      os << "\n";
      for (unsigned m = 0; m <= args.max_m; ++m) {
        os << m;
        for (const auto& cell : grid[m]) os << sep << cell;
        os << "\n";
      }
    }
    return kExitOk;
  });
}

struct VerifyArgs {
  unsigned trials = 1000;
  unsigned max_degree = 12;
  std::uint64_t seed = 1;
  OutputOptions out;
};

int run_verify(const VerifyArgs& args) {
  circat::AxiomCheckReport report = circat::verify_axioms(args.trials, args.max_degree, args.seed);
  int rc = with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "verify";
      doc["trials"] = report.trials;
      doc["max_degree"] = report.max_degree;
      doc["seed"] = report.seed;
      doc["normalization"] = report.normalization_ok ? "pass" : "fail";
      doc["locality_failures"] = report.locality_failures;
      doc["invariance_failures"] = report.invariance_failures;
      doc["failures"] = report.failures;
      doc["pass"] = report.all_passed();
      os << doc.dump(2) << "\n";
    } else {
      os << "seed = " << report.seed << ", trials = " << report.trials
         << ", max degree = " << report.max_degree << "\n";
      os << "normalization: " << (report.normalization_ok ? "pass" : "fail") << "\n";
      os << "locality: " << report.locality_failures << " failures in " << report.trials
         << " trials\n";
      os << "invariance: " << report.invariance_failures << " failures in " << report.trials
         << " trials\n";
      for (const auto& f : report.failures) os << "  " << f << "\n";
      os << "result: " << (report.all_passed() ? "pass" : "fail") << "\n";
    }
    return kExitOk;
  });
  if (rc != kExitOk) return rc;
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

struct FfcheckArgs {
  std::uint64_t prime = 0;
  std::uint64_t all_up_to = 0;
  OutputOptions out;
};

int run_ffcheck(const FfcheckArgs& args) {
  std::vector<std::uint32_t> primes;
  if (args.prime != 0) {
    primes.push_back(static_cast<std::uint32_t>(args.prime));
  } else {
    for (std::uint64_t n = 3; n <= args.all_up_to; n += 2) {
      if (circat::is_odd_prime(n)) primes.push_back(static_cast<std::uint32_t>(n));
    }
    if (primes.empty()) {
      throw std::invalid_argument("no odd primes up to " + std::to_string(args.all_up_to));
    }
  }

  std::vector<circat::CrossCheckReport> reports;
  reports.reserve(primes.size());
  for (std::uint32_t p : primes) reports.push_back(circat::cross_check(p));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.all_passed();

  int rc = with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "ffcheck";
      doc["primes"] = ojson::array();
      for (const auto& r : reports) {
        ojson entry;
        entry["p"] = r.modulus;
        entry["checked"] = r.checked;
        entry["mismatches"] = r.mismatch_count;
        entry["pass"] = r.all_passed();
        ojson table = ojson::array();
        for (const auto& e : r.entries) {
          table.push_back({{"k", e.k}, {"l", e.l}, {"got", e.got}, {"expected", e.expected}, {"ok", e.ok}});
        }
        entry["entries"] = std::move(table);
        doc["primes"].push_back(std::move(entry));
      }
      doc["pass"] = all_pass;
      os << doc.dump(2) << "\n";
    } else if (args.out.csv) {
      os << "p,k,l,psi_finite,omega_mod_p,ok\n";
      for (const auto& r : reports) {
        for (const auto& e : r.entries) {
          os << r.modulus << ',' << e.k << ',' << e.l << ',' << e.got << ',' << e.expected << ','
             << (e.ok ? "1" : "0") << "\n";
        }
      }
    } else {
      for (const auto& r : reports) {
        os << "p=" << r.modulus << ": " << r.checked << " pairs checked, " << r.mismatch_count
           << " mismatches: " << (r.all_passed() ? "pass" : "fail") << "\n";
        for (const auto& e : r.entries) {
          if (!e.ok) {
            os << "  (k=" << e.k << ", l=" << e.l << "): got " << e.got << " (mod " << r.modulus
               << "), expected " << e.expected << " (mod " << r.modulus << ")\n";
          }
        }
      }
      os << "result: " << (all_pass ? "pass" : "fail") << "\n";
    }
    return kExitOk;
  });
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitCheckFailed;
}

struct InterpretArgs {
  unsigned m = 0;
  unsigned n = 0;
  OutputOptions out;
};

int run_interpret(const InterpretArgs& args) {
  circat::InterpretResult result = circat::interpret(args.m, args.n);
  bool pass = result.consistent();
  int rc = with_output(args.out, [&](std::ostream& os) {
    if (args.out.json) {
      ojson doc;
      doc["command"] = "interpret";
      doc["m"] = args.m;
      doc["n"] = args.n;
      doc["psi_2_00"] = result.via_functional.to_string();
      doc["two_S"] = result.doubled_super_catalan.str();
      doc["pass"] = pass;
      os << doc.dump(2) << "\n";
    } else {
      os << result.via_functional.to_string() << " = " << result.doubled_super_catalan.str()
         << ": " << (pass ? "pass" : "fail") << "\n";
    }
    return kExitOk;
  });
  if (rc != kExitOk) return rc;
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact circular integral functional and super Catalan toolkit"};
  app.require_subcommand(1);

  PsiArgs psi_args;
  auto* psi_cmd = app.add_subcommand(
      "psi", "evaluate the circular integral functional on a polynomial (x = alpha_1, y = alpha_2)");
  psi_cmd->add_option("expr", psi_args.expr, "polynomial, e.g. \"3/2*x^2 - y + 1\"")->required();
  psi_cmd->add_option("--circle", psi_args.circle, "circle \"r,a,b\" (default: unit circle)");
  psi_cmd->add_option("--expect", psi_args.expect, "exact rational to compare against; mismatch exits 1");
  add_output_flags(psi_cmd, psi_args.out, false);

  ReduceArgs reduce_args;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "canonical form rho + y*omega modulo x^2 + y^2 - 1");
  reduce_cmd->add_option("expr", reduce_args.expr, "polynomial to reduce")->required();
  add_output_flags(reduce_cmd, reduce_args.out, false);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "grid of super Catalan numbers S (or Omega)");
  table_cmd->add_option("--max-m", table_args.max_m, "largest m")->required();
  table_cmd->add_option("--max-n", table_args.max_n, "largest n")->required();
  table_cmd->add_flag("--omega", table_args.emit_omega, "emit Omega(m,n) = S(m,n)/4^(m+n) instead of S");
  add_output_flags(table_cmd, table_args.out, true);

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "check Normalization, Locality, Invariance on seeded random inputs");
  verify_cmd->add_option("--trials", verify_args.trials, "random trials per axiom")
      ->default_val(1000u);
  verify_cmd->add_option("--max-degree", verify_args.max_degree, "degree bound for random polynomials")
      ->default_val(12u);
  verify_cmd->add_option("--seed", verify_args.seed, "PRNG seed")->default_val(std::uint64_t{1});
  add_output_flags(verify_cmd, verify_args.out, false);

  FfcheckArgs ffcheck_args;
  auto* ffcheck_cmd = app.add_subcommand(
      "ffcheck", "compare the finite-field functional against the Omega reduction mod p");
  auto* prime_opt = ffcheck_cmd->add_option("--prime", ffcheck_args.prime, "odd prime modulus");
  auto* upto_opt =
      ffcheck_cmd->add_option("--all-primes-up-to", ffcheck_args.all_up_to, "check every odd prime <= N");
  prime_opt->excludes(upto_opt);
  add_output_flags(ffcheck_cmd, ffcheck_args.out, true);

  InterpretArgs interpret_args;
  auto* interpret_cmd = app.add_subcommand(
      "interpret", "2S(m,n) as the radius-2 functional value on x^(2m)*y^(2n), both routes");
  interpret_cmd->add_option("--m", interpret_args.m, "index m")->required();
  interpret_cmd->add_option("--n", interpret_args.n, "index n")->required();
  add_output_flags(interpret_cmd, interpret_args.out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (psi_cmd->parsed()) return run_psi(psi_args);
    if (reduce_cmd->parsed()) return run_reduce(reduce_args);
    if (table_cmd->parsed()) return run_table(table_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (ffcheck_cmd->parsed()) {
      if (ffcheck_args.prime == 0 && ffcheck_args.all_up_to == 0) {
        std::cerr << "error: ffcheck requires --prime or --all-primes-up-to\n";
        return kExitUsage;
      }
      return run_ffcheck(ffcheck_args);
    }
    if (interpret_cmd->parsed()) return run_interpret(interpret_args);
  } catch (const circat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
