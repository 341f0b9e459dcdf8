// Copyright (c) 2026 The unicornpaths Authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <random>

namespace ucn {

// Self-contained integer draws: the standard distributions are
// implementation-defined, and reports must be bit-identical for a given seed.
class Rng {
public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  // uniform in [lo, hi], inclusive
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(engine_());
    uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % span;
    uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<int64_t>(draw % span);
  }

  bool coin() { return (engine_() & 1) != 0; }

private:
  std::mt19937_64 engine_;
};

} // namespace ucn
