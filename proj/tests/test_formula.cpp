#include <set>
#include <vector>

#include "colorsat/formula.hpp"
#include "colorsat/generator.hpp"
#include "colorsat/rng.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace colorsat;

namespace {

Assignment with_false(const Formula& f, const std::vector<VarId>& falses) {
  Assignment a(f.var_count(), true);
  for (VarId v : falses) a.set(v, false);
  return a;
}

}  // namespace

TEST_CASE("parse_dimacs reads the reference formula") {
  Formula f = parse_dimacs(fixtures::small_satisfiable_dimacs());
  CHECK(f.var_count() == 9);
  CHECK(f.color_count() == 3);
  CHECK(f.positive_count() == 3);
  CHECK(f == fixtures::small_satisfiable());
  CHECK(f.color_of(5) == 1);
  CHECK(f.positive_clauses_of(8) == std::vector<int>{0, 2});
}

TEST_CASE("parse_dimacs accepts the empty formula") {
  Formula f = parse_dimacs(std::string("p cnf 0 0\n"));
  CHECK(f.var_count() == 0);
  CHECK(f.color_count() == 0);
  CHECK(f.positive_count() == 0);
}

TEST_CASE("parse_dimacs tolerates CRLF endings and clauses across lines") {
  Formula crlf = parse_dimacs(std::string("p cnf 3 1\r\n-1 -2 -3 0\r\n"));
  CHECK(crlf.color_count() == 1);

  Formula split = parse_dimacs(std::string("p cnf 3 1\n1 2\n3 0\n"));
  CHECK(split.positives() == std::vector<ClauseVars>{{1, 2, 3}});
}

TEST_CASE("parse_dimacs rejects malformed input with line numbers") {
  auto expect_error = [](const std::string& text, const char* fragment) {
    try {
      parse_dimacs(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("p cnf 3 1\n1 -2 3 0\n", "non-monotone");
  expect_error("p cnf 3 1\n1 2 0\n", "expected exactly 3");
  expect_error("p cnf 4 1\n1 2 3 4 0\n", "more than 3");
  expect_error("p cnf 3 1\n1 2 2 0\n", "duplicate variable");
  expect_error("p cnf 3 1\n1 2 9 0\n", "out of range");
  expect_error("p cnf 3 2\n1 2 3 0\n", "clause count mismatch");
  expect_error("p cnf 3 1\n1 2 3 0\n1 2 3 0\n", "more clauses");
  expect_error("1 2 3 0\np cnf 3 1\n", "before 'p cnf' header");
  expect_error("p dnf 3 1\n", "malformed header");
  expect_error("p cnf 3 1\n1 2 3\n", "unterminated clause");
  expect_error("c only a comment\n", "missing 'p cnf' header");
  expect_error("p cnf 3 1\n1 x 3 0\n", "invalid token");

  try {
    parse_dimacs(std::string("p cnf 9 2\n-1 -2 -3 0\n1 -2 3 0\n"));
    FAIL_CHECK("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);  // names the offending line
  }
}

TEST_CASE("write_dimacs round-trips") {
  Formula sat9 = fixtures::small_satisfiable();
  CHECK(parse_dimacs(write_dimacs(sat9)) == sat9);
  CHECK(write_dimacs(Formula{}) == "p cnf 0 0\n");

  // One write/parse/write cycle is byte identical.
  GenSpec spec;
  spec.n = 12;
  spec.seed = 42;
  Formula generated = gen_strict(spec);
  std::string first = write_dimacs(generated);
  std::string second = write_dimacs(parse_dimacs(first));
  CHECK(first == second);
}

TEST_CASE("classify reports the reference fixtures") {
  ClassReport unsat9 = classify(fixtures::dense_unsat());
  CHECK(unsat9.k_max == 9);
  CHECK(unsat9.negated_once);
  CHECK_FALSE(unsat9.strict_31);
  CHECK_FALSE(unsat9.relaxed_31);

  ClassReport sat9 = classify(fixtures::small_satisfiable());
  CHECK(sat9.relaxed_31);
  CHECK_FALSE(sat9.strict_31);
  std::vector<std::pair<VarId, int>> expected = {
      {1, 2}, {3, 1}, {8, 2}, {4, 1}, {7, 2}, {9, 1}, {2, 0}, {5, 0}, {6, 0}};
  for (auto [v, count] : expected) CHECK(sat9.pos_occurrence[v] == count);
}

TEST_CASE("classify accepts generator output as strict") {
  GenSpec spec;
  spec.n = 12;
  spec.seed = 7;
  ClassReport report = classify(gen_strict(spec));
  CHECK(report.strict_31);
  CHECK(report.relaxed_31);
  CHECK(report.k_max == 3);
}

TEST_CASE("strict classification fixes the positive clause count") {
  for (std::uint64_t seed : {1, 2, 3}) {
    GenSpec spec;
    spec.n = 24;
    spec.seed = seed;
    Formula f = gen_strict(spec);
    ClassReport report = classify(f);
    REQUIRE(report.strict_31);
    int sum = 0;
    for (VarId v = 1; v <= f.var_count(); ++v) sum += report.pos_occurrence[v];
    CHECK(sum == 3 * f.var_count());
    CHECK(f.positive_count() == f.var_count());
  }
}

TEST_CASE("evaluate on the reference fixtures") {
  Formula unsat9 = fixtures::dense_unsat();
  CHECK_FALSE(evaluate(unsat9, with_false(unsat9, {1, 4})));
  CHECK(first_unsatisfied_clause(unsat9, with_false(unsat9, {1, 4})) == 2);

  Formula sat9 = fixtures::small_satisfiable();
  CHECK(evaluate(sat9, with_false(sat9, {1, 5, 7})));

  CHECK(evaluate(Formula{}, Assignment(0)));  // vacuous conjunction

  CHECK_THROWS_AS(evaluate(sat9, Assignment(5)), std::invalid_argument);
}

TEST_CASE("flipping false to true only ever breaks negative clauses") {
  Rng rng(11);
  for (int round = 0; round < 20; ++round) {
    GenSpec spec;
    spec.n = 9;
    spec.seed = 100 + round;
    Formula f = gen_strict(spec);
    Assignment a(f.var_count());
    for (VarId v = 1; v <= f.var_count(); ++v) a.set(v, rng.below(2) == 0);
    for (VarId v = 1; v <= f.var_count(); ++v) {
      if (a.value(v)) continue;
      std::set<int> satisfied_positives;
      for (int c = 0; c < f.positive_count(); ++c) {
        bool sat = false;
        for (VarId m : f.positives()[c]) sat = sat || a.value(m);
        if (sat) satisfied_positives.insert(c);
      }
      Assignment flipped = a;
      flipped.set(v, true);
      for (int c : satisfied_positives) {
        bool sat = false;
        for (VarId m : f.positives()[c]) sat = sat || flipped.value(m);
        CHECK(sat);  // satisfied positives stay satisfied
      }
    }
  }
}

TEST_CASE("removing a satisfied clause never flips the verdict to false") {
  Formula f = fixtures::small_satisfiable();
  Assignment a = with_false(f, {1, 5, 7});
  REQUIRE(evaluate(f, a));
  // Drop each clause in turn and re-evaluate.
  for (int skip = 0; skip < f.clause_count(); ++skip) {
    std::vector<std::vector<int>> clauses;
    int index = 0;
    for (const auto& clause : f.colors()) {
      if (index++ != skip) {
        clauses.push_back({-clause[0], -clause[1], -clause[2]});
      }
    }
    for (const auto& clause : f.positives()) {
      if (index++ != skip) clauses.push_back({clause[0], clause[1], clause[2]});
    }
    Formula reduced = Formula::from_clauses(f.var_count(), clauses);
    CHECK(evaluate(reduced, a));
  }
}

TEST_CASE("from_clauses rejects what the parser rejects") {
  CHECK_THROWS_AS(Formula::from_clauses(3, {{1, -2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Formula::from_clauses(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Formula::from_clauses(3, {{1, 2, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Formula::from_clauses(2, {{1, 2, 3}}),
                  std::invalid_argument);
}
