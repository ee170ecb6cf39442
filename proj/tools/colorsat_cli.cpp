// Command-line front end for the colorsat shared library. Talks to the
// solver exclusively through the C API in colorsat/colorsat.h.
//
// Exit codes: 0 success / requested class holds, 1 input or usage error,
// 2 class check failed, 3 unsatisfiable (or failed verification).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "colorsat/colorsat.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitClassFailed = 2;
constexpr int kExitUnsat = 3;

struct FormulaDeleter {
  void operator()(colorsat_formula* f) const { colorsat_formula_free(f); }
};
struct SolutionDeleter {
  void operator()(colorsat_solution* s) const { colorsat_solution_free(s); }
};
using FormulaPtr = std::unique_ptr<colorsat_formula, FormulaDeleter>;
using SolutionPtr = std::unique_ptr<colorsat_solution, SolutionDeleter>;

void print_error(const std::string& context) {
  std::cerr << "colorsat: error: " << context << ": " << colorsat_last_error()
            << "\n";
}

FormulaPtr load_formula(const std::string& path, int* exit_code) {
  colorsat_formula* raw = nullptr;
  colorsat_status status = colorsat_formula_parse_file(path.c_str(), &raw);
  if (status != COLORSAT_OK) {
    print_error(path);
    *exit_code = kExitInputError;
    return nullptr;
  }
  return FormulaPtr(raw);
}

// Deterministic 64-bit mix for deriving per-instance fuzz seeds.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string clause_text(const colorsat_formula* formula, int index) {
  int lits[3] = {0, 0, 0};
  if (colorsat_formula_clause(formula, index, lits) != COLORSAT_OK) return "?";
  std::ostringstream out;
  out << lits[0] << ' ' << lits[1] << ' ' << lits[2] << " 0";
  return out.str();
}

void print_vline(std::ostream& out, const std::vector<signed char>& values) {
  out << "s SATISFIABLE\n";
  std::string line = "v";
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::string lit = (values[i] ? " " : " -") + std::to_string(i + 1);
    if (line.size() + lit.size() > 76) {
      out << line << "\n";
      line = "v";
    }
    line += lit;
  }
  line += " 0";
  out << line << "\n";
}

std::vector<signed char> solution_values(const colorsat_solution* solution) {
  int n = colorsat_solution_var_count(solution);
  std::vector<signed char> values(n);
  for (int v = 1; v <= n; ++v) {
    values[v - 1] = static_cast<signed char>(colorsat_solution_value(solution, v));
  }
  return values;
}

// Reads a DIMACS-style v-line assignment ('c'/'s' lines ignored). Returns
// false with a message when the assignment is partial or inconsistent.
bool parse_vlines(std::istream& in, int var_count,
                  std::vector<signed char>* out, std::string* message) {
  std::vector<int> seen(var_count + 1, -1);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] != 'v' && line[0] != 'V') continue;
    std::istringstream tokens(line.substr(1));
    long lit = 0;
    while (tokens >> lit) {
      if (lit == 0) continue;
      long var = lit < 0 ? -lit : lit;
      if (var > var_count) {
        *message = "literal " + std::to_string(lit) + " out of range";
        return false;
      }
      int value = lit > 0 ? 1 : 0;
      if (seen[var] >= 0 && seen[var] != value) {
        *message = "conflicting values for variable " + std::to_string(var);
        return false;
      }
      seen[var] = value;
    }
    if (!tokens.eof()) {
      *message = "invalid token in v-line";
      return false;
    }
  }
  out->resize(var_count);
  for (int v = 1; v <= var_count; ++v) {
    if (seen[v] < 0) {
      *message = "assignment is partial: variable " + std::to_string(v) +
                 " has no value";
      return false;
    }
    (*out)[v - 1] = static_cast<signed char>(seen[v]);
  }
  return true;
}

// -- validate -------------------------------------------------------------

struct ValidateOptions {
  std::string path;
  bool relaxed = false;
  bool json = false;
};

int run_validate(const ValidateOptions& opts) {
  int exit_code = kExitOk;
  FormulaPtr formula = load_formula(opts.path, &exit_code);
  if (!formula) return exit_code;
  colorsat_class_report report{};
  if (colorsat_formula_classify(formula.get(), &report) != COLORSAT_OK) {
    print_error(opts.path);
    return kExitInputError;
  }
  int vars = colorsat_formula_var_count(formula.get());
  if (opts.json) {
    nlohmann::json doc;
    doc["is_3cnf"] = report.is_3cnf != 0;
    doc["is_monotone"] = report.is_monotone != 0;
    doc["negated_once"] = report.negated_once != 0;
    doc["k_max"] = report.k_max;
    doc["strict_31"] = report.strict_31 != 0;
    doc["relaxed_31"] = report.relaxed_31 != 0;
    doc["var_count"] = vars;
    doc["color_count"] = colorsat_formula_color_count(formula.get());
    doc["positive_count"] = colorsat_formula_positive_count(formula.get());
    std::vector<int> occurrence;
    for (int v = 1; v <= vars; ++v) {
      occurrence.push_back(colorsat_formula_positive_occurrences(formula.get(), v));
    }
    doc["pos_occurrence"] = occurrence;
    std::cout << doc.dump() << "\n";
  } else {
    auto flag = [](int b) { return b ? "true" : "false"; };
    std::cout << "is_3cnf=" << flag(report.is_3cnf) << "\n"
              << "is_monotone=" << flag(report.is_monotone) << "\n"
              << "negated_once=" << flag(report.negated_once) << "\n"
              << "k_max=" << report.k_max << "\n"
              << "strict_31=" << flag(report.strict_31) << "\n"
              << "relaxed_31=" << flag(report.relaxed_31) << "\n"
              << "var_count=" << vars << "\n"
              << "color_count=" << colorsat_formula_color_count(formula.get())
              << "\n"
              << "positive_count="
              << colorsat_formula_positive_count(formula.get()) << "\n";
  }
  bool holds = opts.relaxed ? report.relaxed_31 != 0 : report.strict_31 != 0;
  return holds ? kExitOk : kExitClassFailed;
}

// -- solve ----------------------------------------------------------------

struct SolveOptions {
  std::string path;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::int64_t budget = 0;
  bool stats = false;
  std::string dot_path;
};

int run_solve(const SolveOptions& opts) {
  int exit_code = kExitOk;
  FormulaPtr formula = load_formula(opts.path, &exit_code);
  if (!formula) return exit_code;

  colorsat_solve_options options;
  colorsat_solve_options_default(&options);
  options.repair_budget = opts.budget;
  if (opts.has_seed) {
    options.seed = opts.seed;
    options.random_ties = 1;
  }

  colorsat_solution* raw = nullptr;
  colorsat_status status = colorsat_solve(formula.get(), &options, &raw);
  if (status == COLORSAT_UNSAT) {
    std::cout << "s UNSATISFIABLE\n";
    return kExitUnsat;
  }
  if (status != COLORSAT_OK) {
    print_error(opts.path);
    return kExitInputError;
  }
  SolutionPtr solution(raw);
  print_vline(std::cout, solution_values(solution.get()));

  if (opts.stats) {
    colorsat_solve_stats stats{};
    colorsat_solution_stats(solution.get(), &stats);
    std::cout << "c stats expansions=" << stats.expansions
              << " reassignments=" << stats.reassignments
              << " repairs=" << stats.repairs
              << " fallback_invocations=" << stats.fallback_invocations
              << " loop_detections=" << stats.loop_detections << "\n"
              << "c stats cases ishape=" << stats.case_ishape
              << " cshape=" << stats.case_cshape
              << " cluster=" << stats.case_cluster
              << " composite=" << stats.case_composite << "\n";
  }
  if (!opts.dot_path.empty()) {
    char* dot = nullptr;
    if (colorsat_solution_dot(solution.get(), &dot) != COLORSAT_OK) {
      print_error(opts.dot_path);
      return kExitInputError;
    }
    std::ofstream out(opts.dot_path);
    out << dot;
    colorsat_string_free(dot);
    if (!out) {
      std::cerr << "colorsat: error: cannot write '" << opts.dot_path << "'\n";
      return kExitInputError;
    }
  }
  return kExitOk;
}

// -- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string formula_path;
  std::string assignment_path;
};

int run_verify(const VerifyOptions& opts) {
  int exit_code = kExitOk;
  FormulaPtr formula = load_formula(opts.formula_path, &exit_code);
  if (!formula) return exit_code;
  std::ifstream in(opts.assignment_path);
  if (!in) {
    std::cerr << "colorsat: error: cannot open '" << opts.assignment_path
              << "'\n";
    return kExitInputError;
  }
  std::vector<signed char> values;
  std::string message;
  int vars = colorsat_formula_var_count(formula.get());
  if (!parse_vlines(in, vars, &values, &message)) {
    std::cerr << "colorsat: error: " << opts.assignment_path << ": " << message
              << "\n";
    return kExitInputError;
  }
  int clause = -1;
  if (colorsat_formula_first_unsatisfied(formula.get(), values.data(),
                                         values.size(), &clause) !=
      COLORSAT_OK) {
    print_error(opts.formula_path);
    return kExitInputError;
  }
  if (clause < 0) {
    std::cout << "s VERIFIED\n";
    return kExitOk;
  }
  std::cout << "s NOT VERIFIED\n"
            << "c unsatisfied clause " << clause << ": "
            << clause_text(formula.get(), clause) << "\n";
  return kExitUnsat;
}

// -- gen ------------------------------------------------------------------

struct GenOptions {
  int n = 0;
  std::string mode = "strict";
  int k_max = 3;
  std::uint64_t seed = 0;
  std::string out_path = "-";
};

int run_gen(const GenOptions& opts) {
  colorsat_formula* raw = nullptr;
  colorsat_status status =
      opts.mode == "relaxed"
          ? colorsat_generate_relaxed(opts.n, opts.k_max, opts.seed, &raw)
          : colorsat_generate_strict(opts.n, opts.seed, &raw);
  if (status != COLORSAT_OK) {
    print_error("gen");
    return kExitInputError;
  }
  FormulaPtr formula(raw);
  if (opts.out_path == "-") {
    char* text = nullptr;
    if (colorsat_formula_write_string(formula.get(), &text) != COLORSAT_OK) {
      print_error("gen");
      return kExitInputError;
    }
    std::cout << text;
    colorsat_string_free(text);
    return kExitOk;
  }
  if (colorsat_formula_write_file(formula.get(), opts.out_path.c_str()) !=
      COLORSAT_OK) {
    print_error(opts.out_path);
    return kExitInputError;
  }
  return kExitOk;
}

// -- fuzz -----------------------------------------------------------------

struct FuzzOptions {
  long count = 1000;
  std::string n_range = "3:30";
  std::uint64_t seed = 1;
  int oracle_cap = 10;  // colors
  std::string report_path;
  long inject_fault = -1;  // test hook: corrupt this instance's assignment
};

int run_fuzz(const FuzzOptions& opts) {
  int lo = 0, hi = 0;
  {
    std::istringstream range(opts.n_range);
    char sep = 0;
    if (!(range >> lo >> sep >> hi) || sep != ':' || lo < 3 || hi < lo) {
      std::cerr << "colorsat: error: bad --n-range '" << opts.n_range
                << "', expected LO:HI with 3 <= LO <= HI\n";
      return kExitInputError;
    }
  }
  std::vector<int> sizes;
  for (int n = lo; n <= hi; ++n) {
    if (n % 3 == 0) sizes.push_back(n);
  }
  if (sizes.empty()) {
    std::cerr << "colorsat: error: no multiple of 3 in --n-range\n";
    return kExitInputError;
  }

  long failures = 0, oracle_checked = 0, oracle_agreed = 0;
  colorsat_solve_stats totals{};
  for (long i = 0; i < opts.count; ++i) {
    std::uint64_t instance_seed = mix64(opts.seed * 0x9e3779b97f4a7c15ull +
                                        static_cast<std::uint64_t>(i));
    int n = sizes[static_cast<std::size_t>(mix64(instance_seed) % sizes.size())];

    colorsat_formula* raw_formula = nullptr;
    if (colorsat_generate_strict(n, instance_seed, &raw_formula) !=
        COLORSAT_OK) {
      print_error("fuzz generate");
      return kExitInputError;
    }
    FormulaPtr formula(raw_formula);

    auto fail_instance = [&](const std::string& reason) {
      failures++;
      std::string repro =
          "colorsat-fuzz-fail-" + std::to_string(instance_seed) + ".cnf";
      colorsat_formula_write_file(formula.get(), repro.c_str());
      std::cerr << "c fuzz FAILURE instance=" << i << " n=" << n
                << " seed=" << instance_seed << " reason=" << reason
                << " repro=" << repro << "\n";
    };

    colorsat_solution* raw_solution = nullptr;
    colorsat_status status = colorsat_solve(formula.get(), nullptr, &raw_solution);
    if (status != COLORSAT_OK) {
      fail_instance(std::string("solve: ") + colorsat_status_name(status));
      continue;
    }
    SolutionPtr solution(raw_solution);

    colorsat_solve_stats stats{};
    colorsat_solution_stats(solution.get(), &stats);
    totals.expansions += stats.expansions;
    totals.reassignments += stats.reassignments;
    totals.repairs += stats.repairs;
    totals.fallback_invocations += stats.fallback_invocations;
    totals.loop_detections += stats.loop_detections;
    totals.case_ishape += stats.case_ishape;
    totals.case_cshape += stats.case_cshape;
    totals.case_cluster += stats.case_cluster;
    totals.case_composite += stats.case_composite;

    std::vector<signed char> values = solution_values(solution.get());
    if (i == opts.inject_fault && !values.empty()) {
      values[0] = values[0] ? 0 : 1;  // mutant hook for harness sensitivity
    }
    int satisfied = 0;
    if (colorsat_formula_evaluate(formula.get(), values.data(), values.size(),
                                  &satisfied) != COLORSAT_OK ||
        satisfied != 1) {
      fail_instance("assignment does not satisfy the formula");
      continue;
    }

    if (colorsat_formula_color_count(formula.get()) <= opts.oracle_cap) {
      oracle_checked++;
      colorsat_solution* raw_oracle = nullptr;
      colorsat_status oracle_status = colorsat_oracle_enumerate(
          formula.get(), opts.oracle_cap, &raw_oracle);
      SolutionPtr oracle(raw_oracle);
      if (oracle_status == COLORSAT_OK) {
        oracle_agreed++;
      } else {
        fail_instance(std::string("oracle disagrees: ") +
                      colorsat_status_name(oracle_status));
        continue;
      }
    }
  }

  std::cout << "c fuzz instances=" << opts.count
            << " verified=" << (opts.count - failures)
            << " failures=" << failures << "\n"
            << "c fuzz fallback_invocations=" << totals.fallback_invocations
            << " loop_detections=" << totals.loop_detections << "\n"
            << "c fuzz case_histogram ishape=" << totals.case_ishape
            << " cshape=" << totals.case_cshape
            << " cluster=" << totals.case_cluster
            << " composite=" << totals.case_composite << "\n"
            << "c fuzz oracle_checked=" << oracle_checked
            << " oracle_agreements=" << oracle_agreed << "\n";
  if (totals.fallback_invocations > 0) {
    std::cout << "c fuzz WARNING: the case analysis fell back to exhaustive "
                 "search "
              << totals.fallback_invocations << " time(s)\n";
  }

  if (!opts.report_path.empty()) {
    nlohmann::json doc;
    doc["instances"] = opts.count;
    doc["failures"] = failures;
    doc["oracle_checked"] = oracle_checked;
    doc["oracle_agreements"] = oracle_agreed;
    doc["fallback_invocations"] = totals.fallback_invocations;
    doc["loop_detections"] = totals.loop_detections;
    doc["case_histogram"] = {{"ishape", totals.case_ishape},
                             {"cshape", totals.case_cshape},
                             {"cluster", totals.case_cluster},
                             {"composite", totals.case_composite}};
    std::ofstream out(opts.report_path);
    out << doc.dump(2) << "\n";
    if (!out) {
      std::cerr << "colorsat: error: cannot write '" << opts.report_path
                << "'\n";
      return kExitInputError;
    }
  }
  return failures == 0 ? kExitOk : kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive solver for monotone 3-CNF formulas whose "
               "variables occur once negated and at most three times "
               "unnegated"};
  app.require_subcommand(1);
  int rc = kExitOk;

  ValidateOptions validate_opts;
  auto* validate = app.add_subcommand(
      "validate", "Classify a DIMACS file against the (3,1) class");
  validate->add_option("file", validate_opts.path, "DIMACS CNF file")
      ->required();
  auto* strict_flag = validate->add_flag("--strict", "require exactly three "
                                         "positive occurrences (default)");
  validate
      ->add_flag("--relaxed", validate_opts.relaxed,
                 "require at most three positive occurrences")
      ->excludes(strict_flag);
  validate->add_flag("--json", validate_opts.json, "emit one JSON object");
  validate->callback([&]() { rc = run_validate(validate_opts); });

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Find a satisfying assignment");
  solve->add_option("file", solve_opts.path, "DIMACS CNF file")->required();
  auto* seed_opt =
      solve->add_option("--seed", solve_opts.seed,
                        "seed for randomized tie-breaking");
  solve->add_option("--budget", solve_opts.budget,
                    "reassignment steps per repair (0 = 4 * variables)");
  solve->add_flag("--stats", solve_opts.stats, "print solver statistics");
  solve->add_option("--dot", solve_opts.dot_path,
                    "write the final structure as Graphviz DOT");
  solve->callback([&]() {
    solve_opts.has_seed = seed_opt->count() > 0;
    rc = run_solve(solve_opts);
  });

  VerifyOptions verify_opts;
  auto* verify =
      app.add_subcommand("verify", "Check a v-line assignment against a file");
  verify->add_option("file", verify_opts.formula_path, "DIMACS CNF file")
      ->required();
  verify
      ->add_option("assignment", verify_opts.assignment_path,
                   "file with v-lines")
      ->required();
  verify->callback([&]() { rc = run_verify(verify_opts); });

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--n", gen_opts.n, "variable count (multiple of 3)")
      ->required();
  gen->add_option("--mode", gen_opts.mode, "strict or relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  gen->add_option("--k", gen_opts.k_max,
                  "relaxed mode: max positive occurrences");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_option("--out", gen_opts.out_path, "output file ('-' for stdout)");
  gen->callback([&]() { rc = run_gen(gen_opts); });

  FuzzOptions fuzz_opts;
  auto* fuzz = app.add_subcommand(
      "fuzz", "Generate, solve and verify a batch of strict instances");
  fuzz->add_option("--count", fuzz_opts.count, "number of instances");
  fuzz->add_option("--n-range", fuzz_opts.n_range, "LO:HI variable counts");
  fuzz->add_option("--seed", fuzz_opts.seed, "base seed");
  fuzz->add_option("--oracle-cap", fuzz_opts.oracle_cap,
                   "cross-check with the oracle up to this many colors");
  fuzz->add_option("--report", fuzz_opts.report_path, "write a JSON summary");
  fuzz->add_option("--inject-fault", fuzz_opts.inject_fault,
                   "corrupt the given instance's assignment (harness test)")
      ->group("");
  fuzz->callback([&]() { rc = run_fuzz(fuzz_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }
  return rc;
}
