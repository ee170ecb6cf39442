#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "colorsat/formula.hpp"

namespace colorsat {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::optional<Assignment> assignment;
  std::uint64_t selections_examined = 0;
  bool satisfiable() const { return assignment.has_value(); }
};

inline constexpr int kDefaultOracleCap = 18;

// Ground truth by exhaustion: walks all one-false-per-color selections in
// lexicographic order and evaluates each one directly. Sound and complete
// for once-negated monotone formulas, since any satisfying assignment can be
// normalized to such a selection. Throws CapExceeded when the formula has
// more colors than color_cap (3^cap selections worst case).
OracleResult enumerate_selections(const Formula& formula,
                                  int color_cap = kDefaultOracleCap);

// Flips extra false variables back to true until every color has exactly one
// false member, highest variable id first. Requires a satisfying input;
// the result still satisfies the formula and differs from the input only by
// false-to-true flips.
Assignment normalize(const Formula& formula, const Assignment& assignment);

}  // namespace colorsat
