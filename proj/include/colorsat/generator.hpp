#pragma once

#include <cstdint>
#include <vector>

#include "colorsat/formula.hpp"
#include "colorsat/solver.hpp"

namespace colorsat {

struct GenSpec {
  enum Mode { kStrict, kRelaxed };
  int n = 0;  // variable count, multiple of 3
  Mode mode = kStrict;
  int k_max = 3;  // kRelaxed: maximum positive occurrences per variable
  std::uint64_t seed = 0;
  int max_retries = 0;  // duplicate-repair swap attempts; 0 = 60 * n
};

// Strict (3,1) instance: colors are the consecutive triples {3i+1..3i+3} and
// every variable occurs exactly three times in the positive clauses.
// Configuration-model construction, deterministic in the seed.
Formula gen_strict(const GenSpec& spec);

// Relaxed variant: each variable gets a seeded positive occurrence count in
// 0..k_max. With k_max <= 3 the result stays in the relaxed (3,1) class.
Formula gen_relaxed(const GenSpec& spec);

// A formula plus scripted expansions that reproduce one lock configuration.
// After classify_prefix the target color classifies as exactly `kind`; after
// kill_prefix as well the target color is dead, ready for repair.
struct Gadget {
  Formula formula;
  std::vector<VarId> classify_prefix;
  std::vector<VarId> kill_prefix;
  ColorId target = 0;
  PatternPart::Kind kind = PatternPart::kIShape;
};

// The seed permutes color numbering; the lock configuration is preserved.
Gadget gen_gadget(PatternPart::Kind kind, std::uint64_t seed);

}  // namespace colorsat
