#pragma once

#include <string>
#include <vector>

#include "colorsat/formula.hpp"

// Reference formulas used across the suites. All of them are built through
// Formula::from_clauses so the tests exercise the same validation path as
// parsing.
namespace fixtures {

// 9 variables, colors {1,2,3} {4,5,6} {7,8,9}, positives
// {1,3,8} {1,4,7} {7,8,9}. Relaxed but not strict: variables 2, 5, 6 never
// occur positively.
inline colorsat::Formula small_satisfiable() {
  return colorsat::Formula::from_clauses(
      9, {{-1, -2, -3},
          {-4, -5, -6},
          {-7, -8, -9},
          {1, 3, 8},
          {1, 4, 7},
          {7, 8, 9}});
}

inline std::string small_satisfiable_dimacs() {
  return "c three colors, three positive clauses\n"
         "p cnf 9 6\n"
         "-1 -2 -3 0\n"
         "-4 -5 -6 0\n"
         "-7 -8 -9 0\n"
         "1 3 8 0\n"
         "1 4 7 0\n"
         "7 8 9 0\n";
}

// The unsatisfiable (9,1) instance: all 27 combinations of one variable per
// color as positive clauses. Any one-false-per-color selection falsifies the
// matching positive clause.
inline colorsat::Formula dense_unsat() {
  std::vector<std::vector<int>> clauses = {{-1, -2, -3}, {-4, -5, -6},
                                           {-7, -8, -9}};
  for (int b : {4, 5, 6}) {
    for (int a : {1, 2, 3}) {
      for (int w : {7, 8, 9}) clauses.push_back({a, w, b});
    }
  }
  return colorsat::Formula::from_clauses(9, clauses);
}

// 27 variables over 9 colors, 13 positive clauses, relaxed. Sparse enough
// that several colors have members with no positive occurrence at all.
inline colorsat::Formula relaxed27() {
  std::vector<std::vector<int>> clauses;
  for (int c = 0; c < 9; ++c) {
    clauses.push_back({-(3 * c + 1), -(3 * c + 2), -(3 * c + 3)});
  }
  const std::vector<std::vector<int>> positives = {
      {5, 7, 13},  {7, 10, 13}, {8, 10, 13}, {9, 10, 17}, {5, 9, 19},
      {2, 17, 19}, {2, 22, 19}, {11, 22, 25}, {4, 16, 22}, {1, 16, 25},
      {6, 7, 25},  {6, 12, 16}, {3, 6, 9}};
  clauses.insert(clauses.end(), positives.begin(), positives.end());
  return colorsat::Formula::from_clauses(27, clauses);
}

// Two I-shapes back to back: color 0 dies between the pair (4,7), fixing it
// kills color 1 which hangs between the pair (10,13). Every escape hatch is
// pinned by auxiliary pairs so the repair has to walk the chain.
inline colorsat::Formula chain() {
  std::vector<std::vector<int>> clauses;
  for (int c = 0; c < 15; ++c) {
    clauses.push_back({-(3 * c + 1), -(3 * c + 2), -(3 * c + 3)});
  }
  const std::vector<std::vector<int>> positives = {
      {4, 7, 1},  {4, 7, 16}, {4, 7, 2},    // first block locks 1, 16, 2
      {10, 13, 5}, {10, 13, 19}, {10, 13, 6},  // second block locks 5, 19, 6
      {22, 25, 3},                              // pins the target's third member
      {28, 31, 23}, {28, 31, 24},               // pins color 7's spares
      {34, 37, 8}, {34, 37, 9},                 // pins color 2's spares
      {40, 43, 26}, {40, 43, 27}};              // pins color 8's spares
  clauses.insert(clauses.end(), positives.begin(), positives.end());
  return colorsat::Formula::from_clauses(45, clauses);
}

inline std::vector<colorsat::VarId> chain_prefix() {
  return {4, 7, 10, 13, 22, 25, 28, 31, 34, 37, 40, 43};
}

// A dead color whose members hang between pairs that occur exactly twice
// with no further occurrences: outside the documented case shapes, so
// classification must refuse and the solver must fall back.
inline colorsat::Formula unclassifiable() {
  return colorsat::Formula::from_clauses(
      15, {{-1, -2, -3},
           {-4, -5, -6},
           {-7, -8, -9},
           {-10, -11, -12},
           {-13, -14, -15},
           {4, 7, 1},
           {4, 7, 2},
           {10, 13, 3}});
}

}  // namespace fixtures
