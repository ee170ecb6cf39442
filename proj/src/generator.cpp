#include "colorsat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "colorsat/rng.hpp"

namespace colorsat {

namespace {

void check_spec(const GenSpec& spec) {
  if (spec.n < 3 || spec.n % 3 != 0) {
    throw std::invalid_argument("variable count must be a positive multiple of 3, got " +
                                std::to_string(spec.n));
  }
}

std::vector<std::vector<int>> color_clauses(int n) {
  std::vector<std::vector<int>> clauses;
  for (int c = 0; c < n / 3; ++c) {
    clauses.push_back({-(3 * c + 1), -(3 * c + 2), -(3 * c + 3)});
  }
  return clauses;
}

bool has_duplicate(const std::array<VarId, 3>& cl) {
  return cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2];
}

int duplicate_pairs(const std::array<VarId, 3>& cl) {
  return (cl[0] == cl[1]) + (cl[0] == cl[2]) + (cl[1] == cl[2]);
}

void shuffle_pool(std::vector<VarId>& pool, Rng& rng) {
  for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i) {
    std::swap(pool[i], pool[rng.below(i + 1)]);
  }
}

std::vector<std::array<VarId, 3>> chop(const std::vector<VarId>& pool) {
  std::vector<std::array<VarId, 3>> clauses(pool.size() / 3);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    clauses[i] = {pool[3 * i], pool[3 * i + 1], pool[3 * i + 2]};
  }
  return clauses;
}

// Repairs clauses holding the same variable twice by seeded swaps with other
// clauses. Returns false once the retry budget runs out with a bad clause
// left.
bool repair_duplicates(std::vector<std::array<VarId, 3>>& clauses, Rng& rng,
                       long retries) {
  const int count = static_cast<int>(clauses.size());
  if (count < 2) return std::none_of(clauses.begin(), clauses.end(), has_duplicate);
  for (;;) {
    int bad = -1;
    for (int i = 0; i < count; ++i) {
      if (has_duplicate(clauses[i])) {
        bad = i;
        break;
      }
    }
    if (bad < 0) return true;
    int p = clauses[bad][0] == clauses[bad][1] ? 1 : 2;
    int before = duplicate_pairs(clauses[bad]);
    bool improved = false;
    while (retries-- > 0) {
      int j = rng.below(count);
      if (j == bad) continue;
      int q = rng.below(3);
      std::swap(clauses[bad][p], clauses[j][q]);
      // A triple duplicate needs two swaps, so any strict improvement that
      // keeps the partner clause clean is accepted.
      if (duplicate_pairs(clauses[bad]) < before &&
          !has_duplicate(clauses[j])) {
        improved = true;
        break;
      }
      std::swap(clauses[bad][p], clauses[j][q]);
    }
    if (!improved) return false;
  }
}

Formula assemble(int n, std::vector<std::array<VarId, 3>> positives) {
  std::vector<std::vector<int>> clauses = color_clauses(n);
  for (auto& cl : positives) {
    std::sort(cl.begin(), cl.end());
    clauses.push_back({cl[0], cl[1], cl[2]});
  }
  return Formula::from_clauses(n, clauses);
}

}  // namespace

Formula gen_strict(const GenSpec& spec) {
  check_spec(spec);
  const int n = spec.n;
  std::vector<std::array<VarId, 3>> positives;
  if (n == 3) {
    // Forced by counting: nine occurrences over three variables.
    positives.assign(3, {1, 2, 3});
  } else {
    Rng rng(spec.seed);
    std::vector<VarId> pool;
    pool.reserve(static_cast<std::size_t>(n) * 3);
    for (VarId v = 1; v <= n; ++v) {
      for (int i = 0; i < 3; ++i) pool.push_back(v);
    }
    shuffle_pool(pool, rng);
    positives = chop(pool);
    long retries = spec.max_retries > 0 ? spec.max_retries : 60L * n;
    if (!repair_duplicates(positives, rng, retries)) {
      throw std::runtime_error(
          "generator: retries exhausted while repairing duplicate clauses");
    }
  }
  Formula f = assemble(n, std::move(positives));
  if (!classify(f).strict_31) {
    throw std::logic_error("generator produced a non-strict instance");
  }
  return f;
}

Formula gen_relaxed(const GenSpec& spec) {
  check_spec(spec);
  if (spec.k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  const int n = spec.n;
  Rng rng(spec.seed);
  std::vector<VarId> pool;
  for (VarId v = 1; v <= n; ++v) {
    int count = rng.below(spec.k_max + 1);
    for (int i = 0; i < count; ++i) pool.push_back(v);
  }
  shuffle_pool(pool, rng);
  while (pool.size() % 3 != 0) pool.pop_back();
  std::vector<std::array<VarId, 3>> positives = chop(pool);
  long retries = spec.max_retries > 0 ? spec.max_retries : 60L * n;
  if (!repair_duplicates(positives, rng, retries)) {
    // Relaxed mode may simply drop the irreparable clauses.
    std::erase_if(positives, has_duplicate);
  }
  return assemble(n, std::move(positives));
}

namespace {

struct GadgetTable {
  int colors;
  std::vector<std::array<int, 3>> positives;
  std::vector<int> classify_prefix;
  std::vector<int> kill_prefix;
};

// Canonical layouts. The target color is always {1,2,3}; the blocking pair
// lives in the next colors, then the padding colors that pin the remaining
// members of the target.
GadgetTable gadget_table(PatternPart::Kind kind) {
  switch (kind) {
    case PatternPart::kIShape:
      // Three parallel clauses between the pair 4,7 lock 1, 10 and 2.
      return {6,
              {{4, 7, 1}, {4, 7, 10}, {4, 7, 2}, {13, 16, 3}},
              {4, 7},
              {13, 16}};
    case PatternPart::kCShape:
      // Two clauses between 4,7 lock 1 and 2; both 4 and 7 recur elsewhere.
      return {7,
              {{4, 7, 1}, {4, 7, 2}, {4, 10, 11}, {7, 13, 14}, {16, 19, 3}},
              {4, 7},
              {16, 19}};
    case PatternPart::kCluster:
      // Only 1 of the target color sits between 4,7; the companions 11,12
      // share that span while 8,9 hang between 4 and the secondary
      // intersection 10.
      return {8,
              {{4, 7, 1},
               {4, 7, 11},
               {4, 7, 12},
               {4, 10, 8},
               {4, 10, 9},
               {13, 16, 2},
               {19, 22, 3}},
              {4, 7, 10},
              {13, 16, 19, 22}};
  }
  throw std::invalid_argument("unknown gadget kind");
}

}  // namespace

Gadget gen_gadget(PatternPart::Kind kind, std::uint64_t seed) {
  GadgetTable table = gadget_table(kind);
  std::vector<int> perm(table.colors);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(seed);
  for (int i = table.colors - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.below(i + 1)]);
  }
  auto remap = [&](int v) {
    int color = (v - 1) / 3;
    int offset = (v - 1) % 3;
    return 3 * perm[color] + offset + 1;
  };

  std::vector<std::vector<int>> clauses = color_clauses(3 * table.colors);
  for (const auto& cl : table.positives) {
    std::array<int, 3> mapped = {remap(cl[0]), remap(cl[1]), remap(cl[2])};
    std::sort(mapped.begin(), mapped.end());
    clauses.push_back({mapped[0], mapped[1], mapped[2]});
  }

  Gadget gadget;
  gadget.formula = Formula::from_clauses(3 * table.colors, clauses);
  for (int v : table.classify_prefix) gadget.classify_prefix.push_back(remap(v));
  for (int v : table.kill_prefix) gadget.kill_prefix.push_back(remap(v));
  gadget.target = perm[0];
  gadget.kind = kind;
  return gadget;
}

}  // namespace colorsat
