#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorsat/formula.hpp"

namespace colorsat {

// One positive clause that pins a variable: the clause's two other members
// are currently intersections, so setting the variable false as well would
// leave the clause with no true literal.
struct LockWitness {
  int clause = -1;  // positive-clause index
  VarId locked_var = 0;
  std::array<VarId, 2> intersections = {0, 0};  // sorted ascending
  bool operator==(const LockWitness&) const = default;
};

struct ColorStatus {
  enum Kind { kExpanded, kOpen, kDead };
  Kind kind = kOpen;
  VarId intersection = 0;        // kExpanded only
  int locked_count = 0;          // kOpen / kDead
  std::vector<VarId> free_vars;  // kOpen only
};

// Expansion state of every color plus a derived lock index. Each expanded
// color contributes exactly one intersection (the variable it will set to
// false); the structure maintains the invariant that no positive clause ever
// has all three members expanded.
class ColorStructure {
 public:
  // Requires a formula where every variable occurs exactly once negated.
  explicit ColorStructure(const Formula& formula);

  const Formula& formula() const { return *formula_; }
  int color_count() const { return static_cast<int>(intersection_.size()); }
  int expanded_count() const { return expanded_count_; }

  bool is_expanded(ColorId c) const { return intersection_.at(c) != 0; }
  std::optional<VarId> intersection_of(ColorId c) const {
    VarId v = intersection_.at(c);
    return v == 0 ? std::nullopt : std::optional<VarId>(v);
  }

  bool is_locked(VarId v) const { return !witnesses_.at(v).empty(); }
  const std::vector<LockWitness>& witnesses(VarId v) const {
    return witnesses_.at(v);
  }

  ColorStatus color_status(ColorId c) const;

  // Makes v its color's intersection and records the locks this induces.
  // Throws std::invalid_argument when v is locked or its color is already
  // expanded.
  void expand(VarId v);

  // Inverse of expand: clears the color's intersection and rewinds the lock
  // index. Throws std::invalid_argument when the color is not expanded.
  void unexpand(ColorId c);

  // True iff every color has an intersection (and the safety invariant
  // holds, which expand() preserves by construction).
  bool is_satisfying() const;

  // False exactly on the current intersections, true everywhere else.
  Assignment extract_assignment() const;

  // Graphviz rendering: intersections as double circles, contributing
  // clauses as edges. Clauses with no intersection member are omitted.
  std::string to_dot() const;

  // Intersection per color, 0 for unexpanded; equal fingerprints mean equal
  // structures.
  const std::vector<VarId>& fingerprint() const { return intersection_; }

  bool operator==(const ColorStructure& other) const {
    return intersection_ == other.intersection_;
  }

 private:
  void add_witness(VarId v, const LockWitness& w);
  void remove_witness(VarId v, int clause);

  const Formula* formula_ = nullptr;
  std::vector<VarId> intersection_;  // per color, 0 = unexpanded
  std::vector<std::vector<LockWitness>> witnesses_;  // per var, clause-sorted
  std::vector<signed char> clause_marks_;  // intersections per positive clause
  int expanded_count_ = 0;
};

}  // namespace colorsat
