#include "colorsat/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace colorsat {

OracleResult enumerate_selections(const Formula& formula, int color_cap) {
  if (!formula.relaxed_valid()) {
    throw std::invalid_argument(
        "oracle requires a once-negated monotone formula");
  }
  const int m = formula.color_count();
  if (m > color_cap) {
    throw CapExceeded("formula has " + std::to_string(m) +
                      " colors, oracle cap is " + std::to_string(color_cap));
  }

  std::vector<ClauseVars> members(m);
  for (ColorId c = 0; c < m; ++c) {
    members[c] = formula.color_members(c);
    std::sort(members[c].begin(), members[c].end());
  }

  OracleResult result;
  std::vector<int> digits(m, 0);
  for (;;) {
    result.selections_examined++;
    Assignment candidate(formula.var_count(), true);
    for (ColorId c = 0; c < m; ++c) candidate.set(members[c][digits[c]], false);
    if (evaluate(formula, candidate)) {
      result.assignment = std::move(candidate);
      return result;
    }
    // next selection in lexicographic order
    int pos = m - 1;
    while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
    if (pos < 0) return result;
    digits[pos]++;
  }
}

Assignment normalize(const Formula& formula, const Assignment& assignment) {
  if (!formula.relaxed_valid()) {
    throw std::invalid_argument(
        "normalize requires a once-negated monotone formula");
  }
  if (!evaluate(formula, assignment)) {
    throw std::invalid_argument("normalize requires a satisfying assignment");
  }
  Assignment out = assignment;
  for (ColorId c = 0; c < formula.color_count(); ++c) {
    std::vector<VarId> falses;
    for (VarId v : formula.color_members(c)) {
      if (!out.value(v)) falses.push_back(v);
    }
    if (falses.empty()) {
      // Unreachable for satisfying input: the negative clause would fail.
      throw std::logic_error("satisfying assignment with an all-true color");
    }
    std::sort(falses.begin(), falses.end());
    while (falses.size() > 1) {
      out.set(falses.back(), true);  // false->true never breaks a positive
      falses.pop_back();
    }
  }
  return out;
}

}  // namespace colorsat
