#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olab/caps.hpp"
#include "olab/gf2n.hpp"
#include "olab/oracle.hpp"

namespace olab {

enum class TargetGroup { bitwise_xor, modular_add };

// Shift oracle: a permutation sigma is drawn uniformly from perm_class and
// the target receives y -> ((y - 1 + sigma(x)) mod N) + 1. N = M = degree.
RandomizedOracle make_shift_oracle(const std::vector<Permutation>& perm_class,
                                   const std::string& name);

// Standard-model oracle with internal randomness: seed r selects functions[r]
// and the target is XORed (or shifted) by its 0-based mask at x. A singleton
// function list yields a deterministic oracle.
RandomizedOracle make_standard_xor_oracle(int control_size, int target_size,
                                          const std::vector<std::vector<int>>& functions,
                                          const std::string& name,
                                          TargetGroup group = TargetGroup::bitwise_xor);

// Hidden-shift oracle: a fresh f with f(x) = f(y) iff x = y + a (over Z_2^n)
// is drawn per query; the target is XORed by f(x). Seed spaces are
// materialized for n <= 3 and generated by unranking at n = 4.
RandomizedOracle make_simon_oracle(int n, std::uint32_t a, const Caps& caps = {});
std::int64_t simon_seed_count(int n);
// The function table (0-based masks, indexed by x-1) for one Simon seed.
std::vector<int> simon_seed_function(int n, std::uint32_t a, std::int64_t seed_index);

// Hidden-linear-structure oracle over GF(2^n): |x>|y> -> |x>|pi(y + s x)>
// with pi drawn uniformly from S_q, q = 2^n. Materialized for n <= 2,
// generated (Lehmer unranking) for n in {3, 4}.
RandomizedOracle make_hls_oracle(int n, FieldElement s, const Caps& caps = {});

Permutation unrank_permutation(int degree, std::int64_t rank);
std::int64_t factorial(int n);

}  // namespace olab
