// Batch front end: classification runs, theorem verification sweeps,
// counting reports and witness emission for deformed multiplication
// semigroups over T_n, IS_n and the bicyclic monoid.
//
// Exit codes: 0 = all checks pass, 1 = verification failure, 2 = usage error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sandwich/report.hpp"

namespace {

using sandwich::cli::GlobalOptions;
using sandwich::cli::Report;
using sandwich::cli::UsageError;
using sandwich::cli::VerifyBounds;

int parse_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + text + "'");
  }
}

void warn_if_cap_raised(const GlobalOptions& opts) {
  if (opts.cap > sandwich::kDefaultEnumerationCap) {
    std::cerr << "warning: enumeration cap raised to " << opts.cap
              << "; element counts grow like n^n and full tables like |S|^2, expect long runs\n";
  }
}

Report run_idempotents(const std::vector<std::string>& args, int chain, const GlobalOptions& opts) {
  if (args.empty()) throw UsageError("idempotents needs: <family> [n] <element>");
  if (args[0] == "B") {
    if (args.size() != 2) throw UsageError("idempotents B needs: B <element>");
    return sandwich::cli::cmd_idempotents_bicyclic(args[1], chain, opts);
  }
  if (args.size() != 3) throw UsageError("idempotents needs: <family> <n> <element>");
  auto family = sandwich::parse_family(args[0]);
  return sandwich::cli::cmd_idempotents_finite(family, parse_int(args[1], "n"), args[2], opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed multiplication semigroups: classification and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--cap", opts.cap, "override the enumeration caps (default 4 table / 5 element)");
  app.add_option("--jobs", opts.jobs, "worker threads for verification sweeps")
      ->capture_default_str();

  auto* idem = app.add_subcommand("idempotents", "idempotents of (S,*_a): list, formula, chain");
  std::vector<std::string> idem_args;
  int chain = 5;
  idem->add_option("args", idem_args, "family [n] element")->expected(-1);
  idem->add_option("--chain", chain, "number of chain idempotents to emit (family B)")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "isomorphism classes of all (S,*_a)");
  std::string cls_family;
  int cls_n = 0;
  classify->add_option("family", cls_family, "T or IS")->required();
  classify->add_option("n", cls_n, "degree")->required();

  auto* witness = app.add_subcommand("witness", "emit permutations tau, pi with b = tau.a.pi");
  std::string wit_family, wit_a, wit_b;
  int wit_n = 0;
  bool full_check = false;
  witness->add_option("family", wit_family, "T or IS")->required();
  witness->add_option("n", wit_n, "degree")->required();
  witness->add_option("a", wit_a, "first sandwich element")->required();
  witness->add_option("b", wit_b, "second sandwich element")->required();
  witness->add_flag("--full-check", full_check, "verify the homomorphism over all element pairs");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  std::string verify_id;
  VerifyBounds bounds;
  verify->add_option("id", verify_id, "one of: lemma1 thm1 lemma2-eq1 type-recovery thm2 prop1 prop2 thm3 thm4 oracle-crosscheck")
      ->required();
  verify->add_option("--n", bounds.n, "degree bound");
  verify->add_option("--grid", bounds.grid, "exponent grid bound (bicyclic sweeps)");
  verify->add_option("--samples", bounds.samples, "sampled pairs / trials");
  verify->add_option("--cases", bounds.cases, "randomized case count");

  auto* count = app.add_subcommand("count", "elements of T_n per type, totals and p(n)");
  int count_n = 0;
  count->add_option("n", count_n, "degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    warn_if_cap_raised(opts);
    Report report;
    if (*idem) {
      report = run_idempotents(idem_args, chain, opts);
    } else if (*classify) {
      report = sandwich::cli::cmd_classify(sandwich::parse_family(cls_family), cls_n, opts);
    } else if (*witness) {
      report = sandwich::cli::cmd_witness(sandwich::parse_family(wit_family), wit_n, wit_a, wit_b,
                                          full_check, opts);
    } else if (*verify) {
      report = sandwich::cli::cmd_verify(verify_id, bounds, opts);
    } else if (*count) {
      report = sandwich::cli::cmd_count(count_n, opts);
    } else {
      return 2;
    }
    std::cout << report.render(opts.format);
    return report.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
