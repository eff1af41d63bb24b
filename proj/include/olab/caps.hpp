#pragma once

#include <cstdint>

namespace olab {

// Tunable limits for the exact enumeration paths. Defaults keep every
// shipped scenario well under a minute on a desktop.
struct Caps {
  // Permutation-class enumeration refuses degrees above this (6 -> 720 perms).
  int max_enumeration_degree = 6;
  // Encoding dimension bound: constructions with (N * M^2)^k above this are refused.
  std::int64_t max_state_dim = 1'000'000;
  // Decider loop bound over enumerated (x, y, z) transcript tuples.
  std::int64_t max_transcripts = 10'000'000;

  static Caps unlimited() {
    Caps c;
    c.max_enumeration_degree = 16;
    c.max_state_dim = INT64_MAX;
    c.max_transcripts = INT64_MAX;
    return c;
  }
};

}  // namespace olab
