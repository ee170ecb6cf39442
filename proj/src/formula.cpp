#include "colorsat/formula.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace colorsat {

namespace {

// Shared clause validation; returns an empty string when the clause is fine.
std::string clause_problem(const std::vector<int>& lits, int var_count) {
  if (lits.size() != 3) {
    return "clause has " + std::to_string(lits.size()) +
           " literals, expected exactly 3";
  }
  bool negative = lits[0] < 0;
  for (int lit : lits) {
    if (lit == 0) return "literal 0 inside clause";
    if ((lit < 0) != negative) return "non-monotone clause (mixed signs)";
    int v = std::abs(lit);
    if (v > var_count) {
      return "variable " + std::to_string(v) + " out of range (max " +
             std::to_string(var_count) + ")";
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(lits[i]) == std::abs(lits[j])) {
        return "duplicate variable " + std::to_string(std::abs(lits[i])) +
               " inside clause";
      }
    }
  }
  return {};
}

}  // namespace

Formula Formula::from_clauses(int var_count,
                              const std::vector<std::vector<int>>& clauses) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  Formula f;
  f.var_count_ = var_count;
  for (const auto& lits : clauses) {
    std::string problem = clause_problem(lits, var_count);
    if (!problem.empty()) throw std::invalid_argument(problem);
    ClauseVars vars = {std::abs(lits[0]), std::abs(lits[1]),
                       std::abs(lits[2])};
    if (lits[0] < 0) {
      f.colors_.push_back(vars);
    } else {
      f.positives_.push_back(vars);
    }
  }
  f.index();
  return f;
}

void Formula::index() {
  color_of_.assign(var_count_ + 1, -1);
  neg_counts_.assign(var_count_ + 1, 0);
  pos_by_var_.assign(var_count_ + 1, {});
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    for (VarId v : colors_[c]) {
      if (neg_counts_[v] == 0) color_of_[v] = static_cast<ColorId>(c);
      neg_counts_[v]++;
    }
  }
  for (std::size_t i = 0; i < positives_.size(); ++i) {
    for (VarId v : positives_[i]) pos_by_var_[v].push_back(static_cast<int>(i));
  }
}

bool Formula::relaxed_valid() const {
  for (VarId v = 1; v <= var_count_; ++v) {
    if (neg_counts_[v] != 1) return false;
  }
  return true;
}

ClassReport classify(const Formula& formula) {
  ClassReport report;
  // Width and monotonicity are construction invariants of Formula, so these
  // hold for anything that parsed or built successfully.
  report.is_3cnf = true;
  report.is_monotone = true;
  report.negated_once = formula.relaxed_valid();
  report.pos_occurrence.assign(formula.var_count() + 1, 0);
  bool all_three = true;
  bool all_at_most_three = true;
  for (VarId v = 1; v <= formula.var_count(); ++v) {
    int count = static_cast<int>(formula.positive_clauses_of(v).size());
    report.pos_occurrence[v] = count;
    report.k_max = std::max(report.k_max, count);
    if (count != 3) all_three = false;
    if (count > 3) all_at_most_three = false;
  }
  report.strict_31 = report.negated_once && all_three;
  report.relaxed_31 = report.negated_once && all_at_most_three;
  return report;
}

std::vector<VarId> Assignment::false_vars() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i]) out.push_back(static_cast<VarId>(i + 1));
  }
  return out;
}

namespace {

bool clause_satisfied(const ClauseVars& vars, bool negative,
                      const Assignment& assignment) {
  for (VarId v : vars) {
    if (assignment.value(v) != negative) return true;
  }
  return false;
}

}  // namespace

bool evaluate(const Formula& formula, const Assignment& assignment) {
  return first_unsatisfied_clause(formula, assignment) == -1;
}

int first_unsatisfied_clause(const Formula& formula,
                             const Assignment& assignment) {
  if (assignment.var_count() != formula.var_count()) {
    throw std::invalid_argument("assignment not total: has " +
                                std::to_string(assignment.var_count()) +
                                " values for " +
                                std::to_string(formula.var_count()) +
                                " variables");
  }
  int index = 0;
  for (const auto& clause : formula.colors()) {
    if (!clause_satisfied(clause, true, assignment)) return index;
    ++index;
  }
  for (const auto& clause : formula.positives()) {
    if (!clause_satisfied(clause, false, assignment)) return index;
    ++index;
  }
  return -1;
}

Formula parse_dimacs(std::istream& in) {
  int declared_vars = -1;
  long declared_clauses = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  std::size_t lineno = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line
    if (first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      if (declared_vars >= 0) throw ParseError(lineno, "duplicate header");
      std::string kind;
      if (!(tokens >> kind) || kind != "cnf") {
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      long vars = -1, count = -1;
      if (!(tokens >> vars >> count) || vars < 0 || count < 0) {
        throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
      }
      std::string extra;
      if (tokens >> extra) throw ParseError(lineno, "trailing tokens after header");
      declared_vars = static_cast<int>(vars);
      declared_clauses = count;
      continue;
    }
    if (declared_vars < 0) throw ParseError(lineno, "clause before 'p cnf' header");

    // Re-scan the whole line as literals (the first token included).
    std::istringstream lits(line);
    int lit = 0;
    while (lits >> lit) {
      if (lit == 0) {
        std::string problem = clause_problem(current, declared_vars);
        if (!problem.empty()) throw ParseError(lineno, problem);
        if (static_cast<long>(clauses.size()) == declared_clauses) {
          throw ParseError(lineno, "more clauses than the header declares");
        }
        clauses.push_back(current);
        current.clear();
      } else {
        if (current.size() == 3) {
          throw ParseError(lineno, "clause has more than 3 literals");
        }
        if (std::abs(lit) > declared_vars) {
          throw ParseError(lineno, "variable " + std::to_string(std::abs(lit)) +
                                       " out of range (max " +
                                       std::to_string(declared_vars) + ")");
        }
        current.push_back(lit);
      }
    }
    if (!lits.eof()) throw ParseError(lineno, "invalid token in clause data");
  }

  if (declared_vars < 0) throw ParseError(lineno, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(lineno, "unterminated clause at end of file");
  if (static_cast<long>(clauses.size()) != declared_clauses) {
    throw ParseError(lineno, "clause count mismatch: header declares " +
                                 std::to_string(declared_clauses) + ", found " +
                                 std::to_string(clauses.size()));
  }
  return Formula::from_clauses(declared_vars, clauses);
}

Formula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

void write_dimacs(const Formula& formula, std::ostream& out) {
  out << "p cnf " << formula.var_count() << ' ' << formula.clause_count()
      << '\n';
  for (const auto& clause : formula.colors()) {
    out << -clause[0] << ' ' << -clause[1] << ' ' << -clause[2] << " 0\n";
  }
  for (const auto& clause : formula.positives()) {
    out << clause[0] << ' ' << clause[1] << ' ' << clause[2] << " 0\n";
  }
}

std::string write_dimacs(const Formula& formula) {
  std::ostringstream out;
  write_dimacs(formula, out);
  return out.str();
}

}  // namespace colorsat
