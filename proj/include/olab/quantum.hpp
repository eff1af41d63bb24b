#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "olab/oracle.hpp"
#include "olab/states.hpp"

namespace olab {

// Basis map |..x..y..> -> |..x..pi_{x,r}(y)..> on the chosen registers;
// all other registers are untouched and the norm is preserved exactly.
PureState apply_oracle_unitary(const PureState& state, const RandomizedOracle& oracle,
                               std::int64_t seed_index, int control_register,
                               int target_register);

// Probability of the "symmetric" outcome (1 + tr(rho F)) / 2 on a state over
// two equal-dimension registers, F being the swap.
Rational swap_test_probability(const DensityMatrix& rho);
Rational swap_test_probability(const PureState& psi);

// Born probabilities tr(M_s rho), validated to sum to exactly 1.
std::vector<Rational> measure(const Povm& povm, const DensityMatrix& rho);

// Best-measurement advantage over prior guessing for binary discrimination:
// 1/2 + ||p0 sigma0 - p1 sigma1||_1 / 2 - max(p0, p1). Float diagnostic; the
// verdict paths use exact sigma equality instead.
double helstrom_advantage(const DensityMatrix& sigma0, const DensityMatrix& sigma1,
                          const Rational& p0, const Rational& p1);

// Swap-test distinguisher for shift oracles (M = N): prepare a uniform
// control against the shift unit, query once, swap-test control vs target.
struct InvCycReport {
  Rational exact_p_symmetric{0};     // E_seed[Pr(symmetric)]
  std::string classification;        // "INV" unless an antisymmetric outcome is possible/seen
  std::optional<double> empirical_p_symmetric;
  int trials = 0;
};
InvCycReport run_inv_cyc_algorithm(const RandomizedOracle& shift_oracle);
InvCycReport run_inv_cyc_algorithm_sampled(const RandomizedOracle& shift_oracle, int trials,
                                           std::uint64_t rng_seed);

// One hidden-shift query: uniform control, oracle, Hadamard layer, measure
// the control. Returns the exact distribution over 0-based vectors v.
std::map<std::uint32_t, Rational> simon_query_distribution(int n, const std::vector<int>& f);

struct SimonSolveResult {
  std::optional<std::uint32_t> recovered;  // hidden vector, 0-based bits
  int queries_used = 0;
};
// Repeats fresh-seed queries, collecting vectors orthogonal to the hidden a,
// until the orthogonal space has dimension n-1; gives up past 50*n queries.
SimonSolveResult simon_solve(const RandomizedOracle& simon_oracle, std::uint64_t rng_seed);

}  // namespace olab
