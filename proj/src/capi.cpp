#include "colorsat/colorsat.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "colorsat/formula.hpp"
#include "colorsat/generator.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/solver.hpp"

struct colorsat_formula {
  colorsat::Formula impl;
};

struct colorsat_solution {
  std::vector<signed char> values;  // 0-based truth values
  colorsat::SolveStats stats;
  std::string dot;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(::operator new(text.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

colorsat_solution* make_solution(const colorsat::Formula& formula,
                                 const colorsat::Assignment& assignment,
                                 const colorsat::SolveStats& stats,
                                 const colorsat::ColorStructure& structure) {
  auto* solution = new colorsat_solution;
  solution->values.resize(formula.var_count());
  for (int v = 1; v <= formula.var_count(); ++v) {
    solution->values[v - 1] = assignment.value(v) ? 1 : 0;
  }
  solution->stats = stats;
  solution->dot = structure.to_dot();
  return solution;
}

// Runs fn inside a catch-all boundary translating exceptions to statuses.
template <typename Fn>
colorsat_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const colorsat::ParseError& e) {
    set_error(e.what());
    return COLORSAT_ERR_PARSE;
  } catch (const colorsat::CapExceeded& e) {
    set_error(e.what());
    return COLORSAT_ERR_CAP;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return COLORSAT_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return COLORSAT_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return COLORSAT_ERR_INTERNAL;
  }
}

colorsat_status require(bool condition, const char* message) {
  if (!condition) {
    set_error(message);
    return COLORSAT_ERR_ARGUMENT;
  }
  return COLORSAT_OK;
}

colorsat_status to_assignment(const colorsat_formula* formula,
                              const signed char* values, size_t len,
                              colorsat::Assignment* out) {
  if (len != static_cast<size_t>(formula->impl.var_count())) {
    set_error("assignment length does not match variable count");
    return COLORSAT_ERR_ARGUMENT;
  }
  colorsat::Assignment assignment(formula->impl.var_count());
  for (size_t i = 0; i < len; ++i) {
    assignment.set(static_cast<int>(i) + 1, values[i] != 0);
  }
  *out = assignment;
  return COLORSAT_OK;
}

}  // namespace

extern "C" {

const char* colorsat_version(void) { return "1.0.0"; }

const char* colorsat_status_name(colorsat_status status) {
  switch (status) {
    case COLORSAT_OK: return "ok";
    case COLORSAT_UNSAT: return "unsatisfiable";
    case COLORSAT_ERR_ARGUMENT: return "invalid argument";
    case COLORSAT_ERR_IO: return "io error";
    case COLORSAT_ERR_PARSE: return "parse error";
    case COLORSAT_ERR_CLASS: return "class error";
    case COLORSAT_ERR_CAP: return "cap exceeded";
    case COLORSAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* colorsat_last_error(void) { return g_last_error.c_str(); }

void colorsat_string_free(char* text) { ::operator delete(text); }

colorsat_status colorsat_formula_parse_file(const char* path,
                                            colorsat_formula** out) {
  if (auto rc = require(path && out, "null argument")) return rc;
  return guarded([&]() {
    std::ifstream in(path);
    if (!in) {
      set_error(std::string("cannot open '") + path + "'");
      return COLORSAT_ERR_IO;
    }
    auto* handle = new colorsat_formula{colorsat::parse_dimacs(in)};
    *out = handle;
    return COLORSAT_OK;
  });
}

colorsat_status colorsat_formula_parse_string(const char* text,
                                              colorsat_formula** out) {
  if (auto rc = require(text && out, "null argument")) return rc;
  return guarded([&]() {
    auto* handle = new colorsat_formula{colorsat::parse_dimacs(std::string(text))};
    *out = handle;
    return COLORSAT_OK;
  });
}

colorsat_status colorsat_formula_write_file(const colorsat_formula* formula,
                                            const char* path) {
  if (auto rc = require(formula && path, "null argument")) return rc;
  return guarded([&]() {
    std::ofstream out(path);
    if (!out) {
      set_error(std::string("cannot write '") + path + "'");
      return COLORSAT_ERR_IO;
    }
    colorsat::write_dimacs(formula->impl, out);
    out.flush();
    return out ? COLORSAT_OK : COLORSAT_ERR_IO;
  });
}

colorsat_status colorsat_formula_write_string(const colorsat_formula* formula,
                                              char** out) {
  if (auto rc = require(formula && out, "null argument")) return rc;
  return guarded([&]() {
    char* text = dup_string(colorsat::write_dimacs(formula->impl));
    if (!text) {
      set_error("out of memory");
      return COLORSAT_ERR_INTERNAL;
    }
    *out = text;
    return COLORSAT_OK;
  });
}

void colorsat_formula_free(colorsat_formula* formula) { delete formula; }

int colorsat_formula_var_count(const colorsat_formula* formula) {
  return formula ? formula->impl.var_count() : -1;
}

int colorsat_formula_color_count(const colorsat_formula* formula) {
  return formula ? formula->impl.color_count() : -1;
}

int colorsat_formula_positive_count(const colorsat_formula* formula) {
  return formula ? formula->impl.positive_count() : -1;
}

colorsat_status colorsat_formula_clause(const colorsat_formula* formula,
                                        int index, int literals[3]) {
  if (auto rc = require(formula && literals, "null argument")) return rc;
  const auto& f = formula->impl;
  if (index < 0 || index >= f.clause_count()) {
    set_error("clause index out of range");
    return COLORSAT_ERR_ARGUMENT;
  }
  if (index < f.color_count()) {
    const auto& clause = f.colors()[index];
    for (int i = 0; i < 3; ++i) literals[i] = -clause[i];
  } else {
    const auto& clause = f.positives()[index - f.color_count()];
    for (int i = 0; i < 3; ++i) literals[i] = clause[i];
  }
  return COLORSAT_OK;
}

colorsat_status colorsat_formula_classify(const colorsat_formula* formula,
                                          colorsat_class_report* out) {
  if (auto rc = require(formula && out, "null argument")) return rc;
  return guarded([&]() {
    colorsat::ClassReport report = colorsat::classify(formula->impl);
    out->is_3cnf = report.is_3cnf;
    out->is_monotone = report.is_monotone;
    out->negated_once = report.negated_once;
    out->k_max = report.k_max;
    out->strict_31 = report.strict_31;
    out->relaxed_31 = report.relaxed_31;
    return COLORSAT_OK;
  });
}

int colorsat_formula_positive_occurrences(const colorsat_formula* formula,
                                          int var) {
  if (!formula || var < 1 || var > formula->impl.var_count()) return -1;
  return static_cast<int>(formula->impl.positive_clauses_of(var).size());
}

colorsat_status colorsat_formula_evaluate(const colorsat_formula* formula,
                                          const signed char* values, size_t len,
                                          int* out_satisfied) {
  if (auto rc = require(formula && (values || len == 0) && out_satisfied,
                        "null argument")) {
    return rc;
  }
  return guarded([&]() {
    colorsat::Assignment assignment;
    if (auto rc = to_assignment(formula, values, len, &assignment)) return rc;
    *out_satisfied = colorsat::evaluate(formula->impl, assignment) ? 1 : 0;
    return COLORSAT_OK;
  });
}

colorsat_status colorsat_formula_first_unsatisfied(
    const colorsat_formula* formula, const signed char* values, size_t len,
    int* out_clause) {
  if (auto rc = require(formula && (values || len == 0) && out_clause,
                        "null argument")) {
    return rc;
  }
  return guarded([&]() {
    colorsat::Assignment assignment;
    if (auto rc = to_assignment(formula, values, len, &assignment)) return rc;
    *out_clause = colorsat::first_unsatisfied_clause(formula->impl, assignment);
    return COLORSAT_OK;
  });
}

void colorsat_solve_options_default(colorsat_solve_options* out) {
  if (!out) return;
  out->seed = 0;
  out->random_ties = 0;
  out->repair_budget = 0;
}

colorsat_status colorsat_solve(const colorsat_formula* formula,
                               const colorsat_solve_options* options,
                               colorsat_solution** out) {
  if (auto rc = require(formula && out, "null argument")) return rc;
  return guarded([&]() {
    colorsat::ClassReport report = colorsat::classify(formula->impl);
    if (!report.relaxed_31) {
      set_error("formula outside the accepted class (k_max=" +
                std::to_string(report.k_max) + ", once-negated=" +
                (report.negated_once ? "yes" : "no") + ")");
      return COLORSAT_ERR_CLASS;
    }
    colorsat::SolverConfig config;
    if (options) {
      config.repair_budget = static_cast<long>(options->repair_budget);
      if (options->random_ties) {
        config.tie_break = colorsat::TieBreak::kSeededRandom;
        config.seed = options->seed;
      }
    }
    colorsat::SolveResult result = colorsat::solve(formula->impl, config);
    if (!result.satisfiable()) {
      *out = nullptr;
      set_error("no satisfying assignment exists");
      return COLORSAT_UNSAT;
    }
    *out = make_solution(formula->impl, result.assignment, result.stats,
                         result.structure);
    return COLORSAT_OK;
  });
}

colorsat_status colorsat_oracle_enumerate(const colorsat_formula* formula,
                                          int color_cap,
                                          colorsat_solution** out) {
  if (auto rc = require(formula && out, "null argument")) return rc;
  return guarded([&]() {
    int cap = color_cap > 0 ? color_cap : colorsat::kDefaultOracleCap;
    colorsat::OracleResult result =
        colorsat::enumerate_selections(formula->impl, cap);
    if (!result.satisfiable()) {
      *out = nullptr;
      set_error("no satisfying selection exists");
      return COLORSAT_UNSAT;
    }
    colorsat::SolveStats stats;
    *out = make_solution(
        formula->impl, *result.assignment, stats,
        colorsat::structure_from_selection(formula->impl, *result.assignment));
    return COLORSAT_OK;
  });
}

void colorsat_solution_free(colorsat_solution* solution) { delete solution; }

int colorsat_solution_value(const colorsat_solution* solution, int var) {
  if (!solution || var < 1 ||
      var > static_cast<int>(solution->values.size())) {
    return -1;
  }
  return solution->values[var - 1];
}

int colorsat_solution_var_count(const colorsat_solution* solution) {
  return solution ? static_cast<int>(solution->values.size()) : -1;
}

colorsat_status colorsat_solution_stats(const colorsat_solution* solution,
                                        colorsat_solve_stats* out) {
  if (auto rc = require(solution && out, "null argument")) return rc;
  out->expansions = solution->stats.expansions;
  out->reassignments = solution->stats.reassignments;
  out->repairs = solution->stats.repairs;
  out->fallback_invocations = solution->stats.fallback_invocations;
  out->loop_detections = solution->stats.loop_detections;
  out->case_ishape = solution->stats.case_ishape;
  out->case_cshape = solution->stats.case_cshape;
  out->case_cluster = solution->stats.case_cluster;
  out->case_composite = solution->stats.case_composite;
  return COLORSAT_OK;
}

colorsat_status colorsat_solution_dot(const colorsat_solution* solution,
                                      char** out) {
  if (auto rc = require(solution && out, "null argument")) return rc;
  char* text = dup_string(solution->dot);
  if (!text) {
    set_error("out of memory");
    return COLORSAT_ERR_INTERNAL;
  }
  *out = text;
  return COLORSAT_OK;
}

colorsat_status colorsat_generate_strict(int n, uint64_t seed,
                                         colorsat_formula** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&]() {
    colorsat::GenSpec spec;
    spec.n = n;
    spec.mode = colorsat::GenSpec::kStrict;
    spec.seed = seed;
    *out = new colorsat_formula{colorsat::gen_strict(spec)};
    return COLORSAT_OK;
  });
}

colorsat_status colorsat_generate_relaxed(int n, int k_max, uint64_t seed,
                                          colorsat_formula** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&]() {
    colorsat::GenSpec spec;
    spec.n = n;
    spec.mode = colorsat::GenSpec::kRelaxed;
    spec.k_max = k_max;
    spec.seed = seed;
    *out = new colorsat_formula{colorsat::gen_relaxed(spec)};
    return COLORSAT_OK;
  });
}

}  // extern "C"
