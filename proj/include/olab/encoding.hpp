#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "olab/caps.hpp"
#include "olab/oracle.hpp"
#include "olab/states.hpp"

namespace olab {

// One-call oracle encoding for a fixed seed: the uniform superposition
// (1/sqrt(NM)) sum_{x,y} |x>|y>|pi_{x,r}(y)> over registers (X, Y, Z) with
// dimensions (N, M, M). Index layout per slot: ((x-1)M + (y-1))M + (z-1).
PureState encode_pure(const RandomizedOracle& oracle, std::int64_t seed_index);

// k-slot encoding for a joint seed tuple: the tensor product of per-slot
// encodings, slots ordered by query number.
PureState encode_pure_tuple(const RandomizedOracle& oracle,
                            const std::vector<std::int64_t>& seed_tuple);

struct EncodingState {
  int N = 0;
  int M = 0;
  int k = 0;
  DensityMatrix state;  // registers (X, Y, Z) per slot
};

// Mixture over the joint seed distribution of k-slot pure encodings.
EncodingState encode_k(const RandomizedOracle& oracle, int k, const SeedDistribution& joint,
                       const Caps& caps = {});

// Heralded retrieval: consumes one encoding slot plus an input on (N, M) and
// applies the success Kraus operator A = sum_x |x><x,x| (x) (1/sqrt(M)) sum_y <y,y|.
// Success probability is 1/(N M^2) for every normalized input; conditioned on
// success the input is acted on exactly as by the seed's oracle unitary. On
// failure both states are consumed and the caller falls back to prior
// guessing, so no failure branch output exists.
struct HeraldedResult {
  Rational success_probability{0};
  std::optional<PureState> output;  // on (X, Z), dims (N, M); absent iff probability 0
};
HeraldedResult heralded_apply(const PureState& encoding_slot, const PureState& input);

// Replays a fixed non-adaptive algorithm (one product input per query slot)
// through the success branch of the heralded simulation and compares the
// resulting mixture with the direct k-query state, exactly.
struct EncodingSimReport {
  bool states_equal = false;
  Rational success_probability{0};  // joint success of the k chained retrievals
};
EncodingSimReport verify_encoding_simulation(const RandomizedOracle& oracle, int k,
                                             const SeedDistribution& joint,
                                             const std::vector<PureState>& per_query_inputs,
                                             const Caps& caps = {});

}  // namespace olab
