#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorsat {

using VarId = int;    // 1-based variable index
using ColorId = int;  // 0-based index into the negative clauses

// Three pairwise distinct variables sharing one polarity.
using ClauseVars = std::array<VarId, 3>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Monotone 3-CNF formula, split into negative clauses (the "colors") and
// positive clauses. Clause order is preserved within each polarity.
class Formula {
 public:
  Formula() = default;

  // Builds from signed DIMACS-style literal triples. Throws
  // std::invalid_argument on mixed polarity, wrong width, duplicate
  // variables inside a clause, or out-of-range variables.
  static Formula from_clauses(int var_count,
                              const std::vector<std::vector<int>>& clauses);

  int var_count() const { return var_count_; }
  int color_count() const { return static_cast<int>(colors_.size()); }
  int positive_count() const { return static_cast<int>(positives_.size()); }
  int clause_count() const { return color_count() + positive_count(); }

  const std::vector<ClauseVars>& colors() const { return colors_; }
  const std::vector<ClauseVars>& positives() const { return positives_; }
  const ClauseVars& color_members(ColorId c) const { return colors_.at(c); }

  // Color containing v, or -1 when v never occurs negated.
  ColorId color_of(VarId v) const { return color_of_.at(v); }
  int negation_count(VarId v) const { return neg_counts_.at(v); }
  const std::vector<int>& positive_clauses_of(VarId v) const {
    return pos_by_var_.at(v);
  }

  // True when every variable occurs exactly once negated, i.e. the colors
  // partition the variables into triples. Occurrence counts on the positive
  // side are not constrained here; see classify() for the (3,1) flags.
  bool relaxed_valid() const;

  bool operator==(const Formula& other) const {
    return var_count_ == other.var_count_ && colors_ == other.colors_ &&
           positives_ == other.positives_;
  }

 private:
  void index();

  int var_count_ = 0;
  std::vector<ClauseVars> colors_;
  std::vector<ClauseVars> positives_;
  std::vector<ColorId> color_of_;            // 1-based, -1 when absent
  std::vector<int> neg_counts_;              // 1-based
  std::vector<std::vector<int>> pos_by_var_; // 1-based -> positive indices
};

struct ClassReport {
  bool is_3cnf = false;
  bool is_monotone = false;
  bool negated_once = false;
  std::vector<int> pos_occurrence;  // 1-based, index 0 unused
  int k_max = 0;
  bool strict_31 = false;   // every positive count exactly 3
  bool relaxed_31 = false;  // every positive count at most 3
};

ClassReport classify(const Formula& formula);

// Total truth mapping over 1..var_count.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int var_count, bool value = true)
      : values_(static_cast<std::size_t>(var_count), value ? 1 : 0) {}

  int var_count() const { return static_cast<int>(values_.size()); }
  bool value(VarId v) const { return values_.at(v - 1) != 0; }
  void set(VarId v, bool value) { values_.at(v - 1) = value ? 1 : 0; }

  std::vector<VarId> false_vars() const;

  bool operator==(const Assignment& other) const = default;

 private:
  std::vector<signed char> values_;
};

// True iff every clause has at least one literal made true. Throws
// std::invalid_argument when the assignment is not total over var_count.
bool evaluate(const Formula& formula, const Assignment& assignment);

// Index (colors first, then positives) of the first clause with no true
// literal, or -1 when the assignment satisfies the formula.
int first_unsatisfied_clause(const Formula& formula,
                             const Assignment& assignment);

Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);

std::string write_dimacs(const Formula& formula);
void write_dimacs(const Formula& formula, std::ostream& out);

}  // namespace colorsat
