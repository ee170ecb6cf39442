#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colorsat/colorstruct.hpp"
#include "colorsat/formula.hpp"

namespace colorsat {

enum class TieBreak { kLowestVar, kSeededRandom };

struct SolverConfig {
  TieBreak tie_break = TieBreak::kLowestVar;
  // Reassignment steps allowed per repair; 0 means 4 * var_count.
  long repair_budget = 0;
  // Drives kSeededRandom tie-breaking; ignored under kLowestVar.
  std::uint64_t seed = 0;
};

// How a color's locked members hang between pairs of intersections. A part
// describes one intersection pair (g, u); the full pattern is the list of
// parts, Composite when there is more than one.
struct PatternPart {
  enum Kind { kIShape, kCShape, kCluster };
  Kind kind = kIShape;
  VarId g = 0, u = 0;            // the blocking pair, g < u
  std::vector<VarId> blocked;    // third variables of the g-u clauses
  std::vector<int> side_clauses; // CShape: clauses where g or u recur
  std::vector<VarId> companions; // Cluster: blocked vars of other colors
  std::vector<VarId> secondary_intersections;  // Cluster: e.g. the companions'
                                               // own color intersections
};

struct LockPattern {
  std::vector<PatternPart> parts;  // ordered by (g, u)
  bool composite() const { return parts.size() > 1; }
};

// Classifies how the still-locked members of a color are pinned. Returns
// nullopt when the witness layout fits none of the known shapes. Requires at
// least one locked member.
std::optional<LockPattern> classify_lock(const ColorStructure& cs,
                                         ColorId color);

struct RepairStep {
  VarId unexpanded = 0;  // intersection given up
  VarId expanded = 0;    // previously locked member that took its place
  PatternPart::Kind resolved = PatternPart::kIShape;  // part that was broken
  LockPattern pattern;   // full classification of the dead color at this step
};

struct RepairTrace {
  std::vector<RepairStep> steps;
  // Every structure fingerprint the repair passed through, in order and
  // repeat-free unless the outcome is kLoopDetected (the repeat offender is
  // then the last entry).
  std::vector<std::vector<VarId>> visited;
  std::size_t states_visited() const { return visited.size(); }
};

enum class RepairStatus {
  kRepaired,
  kNoMatch,          // classify_lock found an unknown shape
  kStuck,            // no single unexpansion frees any member
  kBudgetExhausted,
  kLoopDetected,     // a reassignment revisited an earlier structure
};

struct RepairOutcome {
  RepairStatus status = RepairStatus::kRepaired;
  RepairTrace trace;
  bool ok() const { return status == RepairStatus::kRepaired; }
};

struct SolveStats {
  std::uint64_t expansions = 0;
  std::uint64_t reassignments = 0;
  std::uint64_t repairs = 0;
  std::uint64_t fallback_invocations = 0;
  std::uint64_t loop_detections = 0;
  std::uint64_t case_ishape = 0;
  std::uint64_t case_cshape = 0;
  std::uint64_t case_cluster = 0;
  std::uint64_t case_composite = 0;
};

class Rng;  // generator.hpp

// Greedy choice: a free variable from an unexpanded, non-dead color with the
// highest locked count (0..2). Ties go to the lowest variable id, or to a
// seeded pick when the config says so. nullopt when no color is expandable.
std::optional<VarId> select_next(const ColorStructure& cs,
                                 const SolverConfig& config,
                                 Rng* rng = nullptr);

// Resolves a dead color by case-classified reassignments: unexpand one
// blocking intersection, expand the freed member, re-expand the victim
// color, cascading until no color is dead. The dead color ends expanded and
// the number of expanded colors strictly grows (by more than one when the
// cascade kills and then resolves colors that had never been expanded).
RepairOutcome repair(ColorStructure& cs, ColorId dead_color,
                     const SolverConfig& config, SolveStats& stats);

// Complete backtracking over one-false-per-color selections, pruning as soon
// as a positive clause accumulates three chosen-false members. Branch order
// tries the seed structure's intersections first. nullopt means no selection
// satisfies the formula, which decides satisfiability for this class.
std::optional<Assignment> fallback_search(const Formula& formula,
                                          const ColorStructure& seed);

enum class SolveStatus { kSatisfiable, kUnsatisfiable };

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsatisfiable;
  Assignment assignment;      // valid when satisfiable
  SolveStats stats;
  ColorStructure structure;   // final structure when satisfiable
  bool satisfiable() const { return status == SolveStatus::kSatisfiable; }
};

// Greedy expansion with repair, escalating to fallback_search if a repair
// fails. Requires classify(formula).relaxed_31; throws std::invalid_argument
// otherwise. Unsatisfiable outcomes are only possible for relaxed inputs.
SolveResult solve(const Formula& formula, const SolverConfig& config = {});

// Builds the structure that expands exactly the false variables of a
// one-false-per-color satisfying assignment.
ColorStructure structure_from_selection(const Formula& formula,
                                        const Assignment& assignment);

}  // namespace colorsat
