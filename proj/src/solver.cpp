#include "colorsat/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "colorsat/rng.hpp"

namespace colorsat {

namespace {

std::vector<ColorId> dead_colors(const ColorStructure& cs) {
  std::vector<ColorId> out;
  for (ColorId c = 0; c < cs.color_count(); ++c) {
    if (!cs.is_expanded(c) &&
        cs.color_status(c).kind == ColorStatus::kDead) {
      out.push_back(c);
    }
  }
  return out;
}

// Intersections shared by every witness of v; unexpanding one frees v.
std::vector<VarId> common_blockers(const ColorStructure& cs, VarId v) {
  const auto& ws = cs.witnesses(v);
  if (ws.empty()) return {};
  std::vector<VarId> common(ws.front().intersections.begin(),
                            ws.front().intersections.end());
  for (std::size_t i = 1; i < ws.size() && !common.empty(); ++i) {
    std::vector<VarId> next;
    for (VarId z : common) {
      if (z == ws[i].intersections[0] || z == ws[i].intersections[1]) {
        next.push_back(z);
      }
    }
    common = std::move(next);
  }
  return common;
}

}  // namespace

std::optional<LockPattern> classify_lock(const ColorStructure& cs,
                                         ColorId color) {
  const Formula& f = cs.formula();
  std::map<std::array<VarId, 2>, std::set<VarId>> members_by_pair;
  int locked_members = 0;
  for (VarId m : f.color_members(color)) {
    const auto& ws = cs.witnesses(m);
    if (ws.empty()) continue;
    ++locked_members;
    for (const auto& w : ws) members_by_pair[w.intersections].insert(m);
  }
  if (locked_members == 0) {
    throw std::invalid_argument("classify_lock: color has no locked member");
  }

  LockPattern pattern;
  for (const auto& [pair, members] : members_by_pair) {
    VarId g = pair[0], u = pair[1];
    std::vector<int> bundle;  // positive clauses containing both g and u
    for (int c : f.positive_clauses_of(g)) {
      const ClauseVars& cv = f.positives()[c];
      if (std::find(cv.begin(), cv.end(), u) != cv.end()) bundle.push_back(c);
    }
    std::vector<VarId> blocked;
    for (int c : bundle) {
      for (VarId m : f.positives()[c]) {
        if (m != g && m != u) blocked.push_back(m);
      }
    }
    std::vector<int> side;
    for (VarId end : {g, u}) {
      for (int c : f.positive_clauses_of(end)) {
        if (std::find(bundle.begin(), bundle.end(), c) == bundle.end()) {
          side.push_back(c);
        }
      }
    }

    PatternPart part;
    part.g = g;
    part.u = u;
    if (members.size() >= 2) {
      if (bundle.size() == 3 && side.empty()) {
        part.kind = PatternPart::kIShape;
        part.blocked = blocked;
      } else if (bundle.size() == 2 && !side.empty()) {
        part.kind = PatternPart::kCShape;
        part.blocked = blocked;
        part.side_clauses = side;
      } else {
        return std::nullopt;  // shape outside the known case analysis
      }
    } else {
      part.kind = PatternPart::kCluster;
      VarId member = *members.begin();
      part.blocked = {member};
      for (VarId b : blocked) {
        if (b != member) part.companions.push_back(b);
      }
      std::set<VarId> secondary;
      for (VarId comp : part.companions) {
        auto iv = cs.intersection_of(f.color_of(comp));
        if (iv && *iv != g && *iv != u) secondary.insert(*iv);
      }
      part.secondary_intersections.assign(secondary.begin(), secondary.end());
    }
    pattern.parts.push_back(std::move(part));
  }
  return pattern;
}

std::optional<VarId> select_next(const ColorStructure& cs,
                                 const SolverConfig& config, Rng* rng) {
  int best_locked = -1;
  std::vector<VarId> candidates;
  for (ColorId c = 0; c < cs.color_count(); ++c) {
    if (cs.is_expanded(c)) continue;
    ColorStatus status = cs.color_status(c);
    if (status.kind == ColorStatus::kDead) continue;
    if (status.locked_count > best_locked) {
      best_locked = status.locked_count;
      candidates = status.free_vars;
    } else if (status.locked_count == best_locked) {
      candidates.insert(candidates.end(), status.free_vars.begin(),
                        status.free_vars.end());
    }
  }
  if (candidates.empty()) return std::nullopt;
  if (config.tie_break == TieBreak::kSeededRandom && rng) {
    return candidates[rng->below(static_cast<int>(candidates.size()))];
  }
  return *std::min_element(candidates.begin(), candidates.end());
}

namespace {

struct ScoredCandidate {
  int dead_after = 0;
  std::size_t member_witnesses = 0;
  VarId member = 0;
  VarId victim = 0;
  bool operator<(const ScoredCandidate& o) const {
    return std::tie(dead_after, member_witnesses, member, victim) <
           std::tie(o.dead_after, o.member_witnesses, o.member, o.victim);
  }
};

void count_case(SolveStats& stats, PatternPart::Kind kind) {
  switch (kind) {
    case PatternPart::kIShape: stats.case_ishape++; break;
    case PatternPart::kCShape: stats.case_cshape++; break;
    case PatternPart::kCluster: stats.case_cluster++; break;
  }
}

}  // namespace

RepairOutcome repair(ColorStructure& cs, ColorId dead_color,
                     const SolverConfig& config, SolveStats& stats) {
  const Formula& f = cs.formula();
  if (cs.color_status(dead_color).kind != ColorStatus::kDead) {
    throw std::invalid_argument("repair requires a dead color");
  }
  const long budget = config.repair_budget > 0
                          ? config.repair_budget
                          : 4L * std::max(1, f.var_count());
  stats.repairs++;
  RepairOutcome outcome;
  std::set<std::vector<VarId>> seen;
  seen.insert(cs.fingerprint());
  outcome.trace.visited.push_back(cs.fingerprint());
  std::set<ColorId> owed;  // colors that must end up expanded again
  owed.insert(dead_color);
  long steps = 0;

  for (;;) {
    for (auto it = owed.begin(); it != owed.end();) {
      it = cs.is_expanded(*it) ? owed.erase(it) : std::next(it);
    }
    std::vector<ColorId> deads = dead_colors(cs);
    if (deads.empty()) {
      if (owed.empty()) break;
      // Re-expansion duty; the color is open here, lowest free member wins.
      ColorStatus status = cs.color_status(*owed.begin());
      VarId pick =
          *std::min_element(status.free_vars.begin(), status.free_vars.end());
      cs.expand(pick);
      stats.expansions++;
      outcome.trace.visited.push_back(cs.fingerprint());
      if (!seen.insert(cs.fingerprint()).second) {
        stats.loop_detections++;
        outcome.status = RepairStatus::kLoopDetected;
        return outcome;
      }
      continue;
    }

    ColorId target = deads.front();
    if (steps >= budget) {
      outcome.status = RepairStatus::kBudgetExhausted;
      return outcome;
    }
    std::optional<LockPattern> pattern = classify_lock(cs, target);
    if (!pattern) {
      outcome.status = RepairStatus::kNoMatch;
      return outcome;
    }
    if (pattern->composite()) stats.case_composite++;

    std::optional<ScoredCandidate> best;
    for (VarId member : f.color_members(target)) {
      for (VarId victim : common_blockers(cs, member)) {
        ColorStructure trial = cs;
        trial.unexpand(f.color_of(victim));
        trial.expand(member);
        ScoredCandidate scored{static_cast<int>(dead_colors(trial).size()),
                               cs.witnesses(member).size(), member, victim};
        if (!best || scored < *best) best = scored;
      }
    }
    if (!best) {
      outcome.status = RepairStatus::kStuck;
      return outcome;
    }

    // The case this step resolves: the part owning the witness pair that the
    // chosen victim belongs to.
    PatternPart::Kind resolved = PatternPart::kIShape;
    for (const auto& w : cs.witnesses(best->member)) {
      if (w.intersections[0] != best->victim &&
          w.intersections[1] != best->victim) {
        continue;
      }
      for (const auto& part : pattern->parts) {
        if (part.g == w.intersections[0] && part.u == w.intersections[1]) {
          resolved = part.kind;
          break;
        }
      }
      break;
    }
    count_case(stats, resolved);

    ColorId victim_color = f.color_of(best->victim);
    cs.unexpand(victim_color);
    cs.expand(best->member);
    stats.reassignments++;
    stats.expansions++;
    steps++;
    owed.insert(victim_color);
    outcome.trace.steps.push_back(
        {best->victim, best->member, resolved, *pattern});
    outcome.trace.visited.push_back(cs.fingerprint());
    if (!seen.insert(cs.fingerprint()).second) {
      stats.loop_detections++;
      outcome.status = RepairStatus::kLoopDetected;
      return outcome;
    }
  }
  outcome.status = RepairStatus::kRepaired;
  return outcome;
}

std::optional<Assignment> fallback_search(const Formula& f,
                                          const ColorStructure& seed) {
  if (!f.relaxed_valid()) {
    throw std::invalid_argument(
        "fallback_search requires a once-negated formula");
  }
  const int m = f.color_count();
  std::vector<std::array<VarId, 3>> order(m);
  for (ColorId c = 0; c < m; ++c) {
    ClauseVars members = f.color_members(c);
    std::sort(members.begin(), members.end());
    if (auto iv = seed.intersection_of(c)) {
      order[c][0] = *iv;
      int k = 1;
      for (VarId v : members) {
        if (v != *iv) order[c][k++] = v;
      }
    } else {
      order[c] = members;
    }
  }

  std::vector<int> false_count(f.positive_count(), 0);
  auto can_set = [&](VarId v) {
    for (int cl : f.positive_clauses_of(v)) {
      if (false_count[cl] >= 2) return false;  // would falsify the clause
    }
    return true;
  };
  auto apply = [&](VarId v) {
    for (int cl : f.positive_clauses_of(v)) false_count[cl]++;
  };
  auto undo = [&](VarId v) {
    for (int cl : f.positive_clauses_of(v)) false_count[cl]--;
  };

  std::vector<int> idx(m, 0);
  int level = 0;
  for (;;) {
    if (level == m) {
      Assignment assignment(f.var_count(), true);
      for (ColorId c = 0; c < m; ++c) assignment.set(order[c][idx[c]], false);
      return assignment;
    }
    bool placed = false;
    while (idx[level] < 3) {
      VarId v = order[level][idx[level]];
      if (can_set(v)) {
        apply(v);
        placed = true;
        break;
      }
      idx[level]++;
    }
    if (placed) {
      level++;
      if (level < m) idx[level] = 0;
    } else {
      if (level == 0) return std::nullopt;
      idx[level] = 0;
      level--;
      undo(order[level][idx[level]]);
      idx[level]++;
    }
  }
}

ColorStructure structure_from_selection(const Formula& formula,
                                        const Assignment& assignment) {
  ColorStructure cs(formula);
  for (VarId v : assignment.false_vars()) cs.expand(v);
  return cs;
}

SolveResult solve(const Formula& formula, const SolverConfig& config) {
  ClassReport report = classify(formula);
  if (!report.relaxed_31) {
    throw std::invalid_argument(
        "formula outside the class: needs one negation and at most three "
        "positive occurrences per variable (k_max=" +
        std::to_string(report.k_max) + ")");
  }
  SolverConfig cfg = config;
  if (cfg.repair_budget <= 0) {
    cfg.repair_budget = 4L * std::max(1, formula.var_count());
  }

  Rng rng(cfg.seed);
  ColorStructure cs(formula);
  SolveStats stats;
  for (;;) {
    std::vector<ColorId> deads = dead_colors(cs);
    if (!deads.empty()) {
      int before = cs.expanded_count();
      RepairOutcome out = repair(cs, deads.front(), cfg, stats);
      if (out.ok()) {
        if (cs.expanded_count() < before + 1 || !dead_colors(cs).empty()) {
          throw std::logic_error("repair postcondition violated");
        }
        continue;
      }
      stats.fallback_invocations++;
      if (auto found = fallback_search(formula, cs)) {
        return {SolveStatus::kSatisfiable, *found, stats,
                structure_from_selection(formula, *found)};
      }
      return {SolveStatus::kUnsatisfiable, Assignment(formula.var_count()),
              stats, cs};
    }
    std::optional<VarId> next = select_next(cs, cfg, &rng);
    if (!next) break;
    cs.expand(*next);
    stats.expansions++;
  }
  if (cs.expanded_count() != formula.color_count()) {
    throw std::logic_error("solver stalled before expanding every color");
  }
  return {SolveStatus::kSatisfiable, cs.extract_assignment(), stats, cs};
}

}  // namespace colorsat
