#include "colorsat/colorstruct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace colorsat {

ColorStructure::ColorStructure(const Formula& formula) : formula_(&formula) {
  if (!formula.relaxed_valid()) {
    throw std::invalid_argument(
        "formula invalid: every variable must occur exactly once negated");
  }
  intersection_.assign(formula.color_count(), 0);
  witnesses_.assign(formula.var_count() + 1, {});
  clause_marks_.assign(formula.positive_count(), 0);
}

ColorStatus ColorStructure::color_status(ColorId c) const {
  ColorStatus status;
  if (VarId v = intersection_.at(c); v != 0) {
    status.kind = ColorStatus::kExpanded;
    status.intersection = v;
    return status;
  }
  for (VarId v : formula_->color_members(c)) {
    if (is_locked(v)) {
      status.locked_count++;
    } else {
      status.free_vars.push_back(v);
    }
  }
  status.kind =
      status.free_vars.empty() ? ColorStatus::kDead : ColorStatus::kOpen;
  return status;
}

void ColorStructure::add_witness(VarId v, const LockWitness& w) {
  auto& list = witnesses_[v];
  auto pos = std::lower_bound(
      list.begin(), list.end(), w,
      [](const LockWitness& a, const LockWitness& b) { return a.clause < b.clause; });
  list.insert(pos, w);
}

void ColorStructure::remove_witness(VarId v, int clause) {
  auto& list = witnesses_[v];
  for (auto it = list.begin(); it != list.end(); ++it) {
    if (it->clause == clause) {
      list.erase(it);
      return;
    }
  }
  throw std::logic_error("lock index out of sync: missing witness");
}

void ColorStructure::expand(VarId v) {
  if (v < 1 || v > formula_->var_count()) {
    throw std::invalid_argument("variable out of range");
  }
  ColorId color = formula_->color_of(v);
  if (intersection_[color] != 0) {
    throw std::invalid_argument("color " + std::to_string(color) +
                                " already expanded");
  }
  if (is_locked(v)) {
    throw std::invalid_argument("variable " + std::to_string(v) +
                                " is locked and cannot be expanded");
  }
  intersection_[color] = v;
  expanded_count_++;
  for (int c : formula_->positive_clauses_of(v)) {
    signed char before = clause_marks_[c]++;
    if (before >= 2) {
      throw std::logic_error("positive clause gained three intersections");
    }
    if (before == 1) {
      // The clause now holds two intersections; its remaining member locks.
      const ClauseVars& members = formula_->positives()[c];
      VarId other_int = 0, locked = 0;
      for (VarId m : members) {
        if (m == v) continue;
        ColorId mc = formula_->color_of(m);
        if (intersection_[mc] == m) {
          other_int = m;
        } else {
          locked = m;
        }
      }
      LockWitness w;
      w.clause = c;
      w.locked_var = locked;
      w.intersections = {std::min(v, other_int), std::max(v, other_int)};
      add_witness(locked, w);
    }
  }
}

void ColorStructure::unexpand(ColorId c) {
  if (c < 0 || c >= color_count()) {
    throw std::invalid_argument("color out of range");
  }
  VarId v = intersection_[c];
  if (v == 0) {
    throw std::invalid_argument("color " + std::to_string(c) +
                                " is not expanded");
  }
  for (int clause : formula_->positive_clauses_of(v)) {
    signed char before = clause_marks_[clause]--;
    if (before == 2) {
      // The witness this clause carried disappears with v.
      const ClauseVars& members = formula_->positives()[clause];
      for (VarId m : members) {
        if (m == v) continue;
        ColorId mc = formula_->color_of(m);
        if (intersection_[mc] != m) remove_witness(m, clause);
      }
    }
  }
  intersection_[c] = 0;
  expanded_count_--;
  // v itself may now be locked by clauses that kept two intersections.
  for (int clause : formula_->positive_clauses_of(v)) {
    if (clause_marks_[clause] == 2) {
      const ClauseVars& members = formula_->positives()[clause];
      std::vector<VarId> ints;
      for (VarId m : members) {
        if (m != v) ints.push_back(m);
      }
      LockWitness w;
      w.clause = clause;
      w.locked_var = v;
      w.intersections = {std::min(ints[0], ints[1]), std::max(ints[0], ints[1])};
      add_witness(v, w);
    }
  }
}

bool ColorStructure::is_satisfying() const {
  if (expanded_count_ != color_count()) return false;
  for (signed char m : clause_marks_) {
    if (m > 2) return false;
  }
  return true;
}

Assignment ColorStructure::extract_assignment() const {
  Assignment assignment(formula_->var_count(), true);
  for (VarId v : intersection_) {
    if (v != 0) assignment.set(v, false);
  }
  return assignment;
}

namespace {

const char* const kPalette[] = {"blue",   "red",  "darkgreen", "orange",
                                "purple", "teal", "olive",     "gray",
                                "brown",  "magenta"};

const char* palette_color(ColorId c) {
  return kPalette[static_cast<std::size_t>(c) % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

}  // namespace

std::string ColorStructure::to_dot() const {
  std::ostringstream out;
  out << "digraph color_structure {\n";
  for (ColorId c = 0; c < color_count(); ++c) {
    VarId v = intersection_[c];
    if (v == 0) continue;
    const char* color = palette_color(c);
    out << "  v" << v << " [label=\"" << v
        << "\", shape=doublecircle, color=" << color << ", fontcolor=" << color
        << "];\n";
  }
  for (int c = 0; c < formula_->positive_count(); ++c) {
    if (clause_marks_[c] == 0) continue;  // clause does not contribute
    const ClauseVars& members = formula_->positives()[c];
    std::vector<VarId> ints, rest;
    for (VarId m : members) {
      if (intersection_[formula_->color_of(m)] == m) {
        ints.push_back(m);
      } else {
        rest.push_back(m);
      }
    }
    if (ints.size() == 2) {
      VarId label = rest[0];
      const char* lc = palette_color(formula_->color_of(label));
      out << "  v" << ints[0] << " -> v" << ints[1] << " [label=\"" << label
          << "\", color=" << lc << ", fontcolor=" << lc << "];\n";
    } else {
      // One intersection: lower free variable labels the edge, the other is
      // drawn as a plain per-clause node.
      VarId label = std::min(rest[0], rest[1]);
      VarId node = std::max(rest[0], rest[1]);
      const char* nc = palette_color(formula_->color_of(node));
      const char* lc = palette_color(formula_->color_of(label));
      out << "  n" << c << " [label=\"" << node << "\", shape=plain, color="
          << nc << ", fontcolor=" << nc << "];\n";
      out << "  v" << ints[0] << " -> n" << c << " [label=\"" << label
          << "\", color=" << lc << ", fontcolor=" << lc << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace colorsat
