#pragma once

#include "olab/caps.hpp"
#include "olab/oracle.hpp"
#include "olab/oracle_constructors.hpp"

namespace olab {

// XOR-lift: controls become pairs (x, y) in [N*M], the target stays [M], and
// the action is z -> z XOR pi_{x,r}(y) (bitwise on 0-based values). Classes,
// priors and the seed model are inherited.
OracleProblem xor_lift(const OracleProblem& problem, TargetGroup group = TargetGroup::bitwise_xor);

// Pairing convention for lifted controls.
int lift_pack_control(int x, int y, int target_size);
std::pair<int, int> lift_unpack_control(int packed, int target_size);

// Amplification: one oracle per class over controls [N]^k and targets [M]^k.
// The hidden pair (pi in C_i, r ~ R^k) is folded into the per-query seed, so
// every query re-randomizes both; only the class index i persists.
OracleProblem amplify(const OracleProblem& problem, int k, const Caps& caps = {});

// Batching: one query to the result performs T independent queries to the
// input oracle (fresh seed per sub-query). Controls/targets are T-fold
// tuples; classes and priors are unchanged.
OracleProblem repeat_batch(const OracleProblem& problem, int T, const Caps& caps = {});

// (N * M^2)^k with an overflow-safe cap comparison.
bool encoding_dim_within(std::int64_t n, std::int64_t m, int k, std::int64_t cap);

}  // namespace olab
