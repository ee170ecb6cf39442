#pragma once

#include <cstdint>

namespace colorsat {

// 64-bit linear congruential generator. Hand-rolled so that seeded runs are
// byte-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) { next(); }

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  std::uint32_t next32() { return static_cast<std::uint32_t>(next() >> 32); }

  // Uniform-ish value in [0, bound); bound must be positive.
  int below(int bound) {
    return static_cast<int>(
        (static_cast<std::uint64_t>(next32()) * static_cast<std::uint64_t>(bound)) >> 32);
  }

  // Folds extra entropy into the state, e.g. a per-instance index.
  void mix(std::uint64_t value) {
    state_ ^= value + 0x9e3779b97f4a7c15ull;
    next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace colorsat
