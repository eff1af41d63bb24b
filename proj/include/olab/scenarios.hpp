#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olab/caps.hpp"
#include "olab/oracle.hpp"
#include "olab/rational.hpp"

namespace olab {

// One expected result of a named experiment, evaluated lazily. `basis` names
// how the expected value is known (closed form, exhaustive decider,
// independence product, ...), which the reports surface as provenance notes.
struct ScenarioCheckResult {
  std::string name;
  std::string basis;
  bool pass = false;
  std::string detail;
};

struct Scenario {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::optional<OracleProblem> problem;  // absent for solver-only instances
  std::vector<std::function<ScenarioCheckResult()>> checks;

  std::vector<ScenarioCheckResult> run_checks() const;
};

// Distinguishing fixed-point-free involutions from full cycles on [N].
Scenario scenario_inv_cyc(int N, const Caps& caps = {});

// Parity of a uniformly random binary function on [N], plus the skewed
// within-class variant that breaks single-query uselessness.
Scenario scenario_parity(int N, const Caps& caps = {});
OracleProblem parity_problem(int N);
OracleProblem parity_problem_skewed(int N, const Rational& skew);

// Hidden-shift problem with a fresh valid function per query.
Scenario scenario_simon(int n, const Caps& caps = {}, std::uint64_t rng_seed = 2024);
OracleProblem simon_problem(int n, const Caps& caps = {});

// Randomized hidden-linear-structure problem over GF(2^n).
Scenario scenario_hls(int n, const Caps& caps = {});
OracleProblem hls_problem(int n, const Caps& caps = {});

// The two-function standard-model example whose first seed is shared:
// two queries determine the function, yet a seed-sharing pair is useless.
Scenario scenario_balanced_binary(const Caps& caps = {});
OracleProblem balanced_binary_problem();

// Amplification of a base separation (weakly useless at k, quantum-useful
// at k) into one-query-vs-everything.
Scenario scenario_amplified(const Scenario& base, int k, const Caps& caps = {});

// Bounded-error batching of the swap-test scenario: T independent
// sub-queries per call, decision rule "any antisymmetric outcome means CYC".
Scenario scenario_bounded_error(const Scenario& base, int T, const Caps& caps = {});

// CLI-facing registry.
struct ScenarioRequest {
  std::string name;
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> T;
  std::uint64_t rng_seed = 2024;
};
Scenario build_scenario(const ScenarioRequest& request, const Caps& caps = {});
std::vector<std::string> scenario_names();

}  // namespace olab
