#include <set>

#include "colorsat/generator.hpp"
#include "colorsat/oracle.hpp"
#include "colorsat/rng.hpp"
#include "doctest.h"
#include "support/fixtures.hpp"

using namespace colorsat;

TEST_CASE("the oracle exhausts the unsatisfiable fixture in 27 selections") {
  OracleResult result = enumerate_selections(fixtures::dense_unsat());
  CHECK_FALSE(result.satisfiable());
  CHECK(result.selections_examined == 27);
}

TEST_CASE("the oracle finds the lexicographically first selection") {
  Formula sat9 = fixtures::small_satisfiable();
  OracleResult result = enumerate_selections(sat9);
  REQUIRE(result.satisfiable());
  CHECK(evaluate(sat9, *result.assignment));
  CHECK(result.assignment->false_vars() == std::vector<VarId>{1, 4, 8});

  // Other selections can satisfy the formula as well.
  Assignment alternative(9, true);
  for (VarId v : {1, 5, 7}) alternative.set(v, false);
  CHECK(evaluate(sat9, alternative));
}

TEST_CASE("the oracle handles the empty formula and the cap") {
  OracleResult empty = enumerate_selections(Formula{});
  REQUIRE(empty.satisfiable());
  CHECK(empty.assignment->var_count() == 0);
  CHECK(empty.selections_examined == 1);

  CHECK_THROWS_AS(enumerate_selections(fixtures::small_satisfiable(), 2), CapExceeded);
}

TEST_CASE("normalize flips the highest extra false variable first") {
  Formula sat9 = fixtures::small_satisfiable();
  Assignment input(9, true);
  for (VarId v : {1, 2, 5, 7}) input.set(v, false);
  REQUIRE(evaluate(sat9, input));
  Assignment output = normalize(sat9, input);
  CHECK(output.false_vars() == std::vector<VarId>{1, 5, 7});
  CHECK(evaluate(sat9, output));
}

TEST_CASE("normalize leaves normalized assignments unchanged") {
  Formula sat9 = fixtures::small_satisfiable();
  Assignment input(9, true);
  for (VarId v : {1, 5, 7}) input.set(v, false);
  CHECK(normalize(sat9, input) == input);
}

TEST_CASE("normalize rejects non-satisfying input") {
  Formula unsat9 = fixtures::dense_unsat();
  Assignment input(9, true);
  input.set(1, false);
  input.set(4, false);
  CHECK_THROWS_AS(normalize(unsat9, input), std::invalid_argument);
}

TEST_CASE("normalization keeps random supersets satisfying") {
  Rng rng(2024);
  int rounds_done = 0;
  for (int round = 0; round < 30; ++round) {
    GenSpec spec;
    spec.n = 3 * (2 + round % 6);
    spec.seed = 6000 + round;
    Formula f = gen_strict(spec);
    OracleResult base = enumerate_selections(f);
    REQUIRE(base.satisfiable());
    Assignment widened = *base.assignment;
    // Add extra false variables wherever that keeps the formula satisfied.
    for (int attempt = 0; attempt < 8; ++attempt) {
      VarId v = 1 + rng.below(f.var_count());
      if (!widened.value(v)) continue;
      widened.set(v, false);
      if (!evaluate(f, widened)) widened.set(v, true);
    }
    REQUIRE(evaluate(f, widened));
    Assignment normalized = normalize(f, widened);
    CHECK(evaluate(f, normalized));
    for (ColorId c = 0; c < f.color_count(); ++c) {
      int falses = 0;
      for (VarId v : f.color_members(c)) falses += normalized.value(v) ? 0 : 1;
      CHECK(falses == 1);
    }
    // Only false-to-true flips are allowed.
    for (VarId v = 1; v <= f.var_count(); ++v) {
      if (widened.value(v)) CHECK(normalized.value(v));
    }
    rounds_done++;
  }
  CHECK(rounds_done == 30);
}
