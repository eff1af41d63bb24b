#include "olab/scenarios.hpp"

#include <bit>
#include <sstream>

#include "olab/errors.hpp"
#include "olab/gf2n.hpp"
#include "olab/oracle_constructors.hpp"
#include "olab/quantum.hpp"
#include "olab/transforms.hpp"
#include "olab/uselessness.hpp"

namespace olab {

std::vector<ScenarioCheckResult> Scenario::run_checks() const {
  std::vector<ScenarioCheckResult> results;
  results.reserve(checks.size());
  for (const auto& check : checks) results.push_back(check());
  return results;
}

namespace {

ScenarioCheckResult expect(const std::string& name, const std::string& basis, bool pass,
                           const std::string& detail) {
  return ScenarioCheckResult{name, basis, pass, detail};
}

ScenarioCheckResult expect_verdict(const std::string& name, const std::string& basis,
                                   const UselessnessVerdict& verdict, bool expected_useless) {
  std::ostringstream detail;
  detail << to_string(verdict.kind) << " @" << verdict.queries << " queries: useless="
         << (verdict.useless ? "true" : "false") << ", expected "
         << (expected_useless ? "true" : "false");
  return expect(name, basis, verdict.useless == expected_useless, detail.str());
}

int parity_of_mask(int mask) { return std::popcount(static_cast<unsigned>(mask)) % 2; }

}  // namespace

OracleProblem parity_problem(int N) {
  if (N < 2 || N > 4) throw_contract("parity scenario supports N in 2..4");
  const int functions = 1 << N;
  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (int f = 0; f < functions; ++f) {
    std::vector<int> table(static_cast<std::size_t>(N));
    int parity = 0;
    std::string bits;
    for (int x = 0; x < N; ++x) {
      const int bit = (f >> x) & 1;
      table[static_cast<std::size_t>(x)] = bit;
      parity ^= bit;
      bits += static_cast<char>('0' + bit);
    }
    oracles.push_back(make_standard_xor_oracle(N, 2, {table}, "f=" + bits));
    classes.push_back(parity == 0 ? "even" : "odd");
    prior.push_back(Rational(1, functions));
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

OracleProblem parity_problem_skewed(int N, const Rational& skew) {
  if (skew <= 0 || skew >= Rational(1, 2)) {
    throw_contract("parity skew must lie strictly between 0 and 1/2");
  }
  const OracleProblem base = parity_problem(N);
  const int functions = 1 << N;
  const Rational within(1, functions / 4);  // 2^{N-2} functions share (class, f(1))
  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (int f = 0; f < functions; ++f) {
    const int parity = parity_of_mask(f);
    const int first_value = f & 1;
    const Rational conditional =
        (first_value == parity ? Rational(1, 2) + skew : Rational(1, 2) - skew) * within;
    oracles.push_back(base.oracle(static_cast<std::size_t>(f)));
    classes.push_back(base.class_of(static_cast<std::size_t>(f)));
    prior.push_back(Rational(1, 2) * conditional);
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

OracleProblem simon_problem(int n, const Caps& caps) {
  if (n < 1 || n > 3) throw_contract("the hidden-shift problem with deciders supports n in 1..3");
  const int q = 1 << n;
  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (int a = 1; a < q; ++a) {
    oracles.push_back(make_simon_oracle(n, static_cast<std::uint32_t>(a), caps));
    classes.push_back("a=" + std::to_string(a));
    prior.push_back(Rational(1, q - 1));
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

OracleProblem hls_problem(int n, const Caps& caps) {
  if (n < 1 || n > 2) throw_contract("the hidden-linear-structure problem supports n in 1..2");
  const int q = static_cast<int>(gf2n_order(n));
  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (int s = 0; s < q; ++s) {
    oracles.push_back(make_hls_oracle(n, make_field_element(n, static_cast<std::uint32_t>(s)), caps));
    classes.push_back("s=" + std::to_string(s));
    prior.push_back(Rational(1, q));
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

OracleProblem balanced_binary_problem() {
  // Balanced f on {0,1}; the oracle's i-th call maps |x> to |x xor f(r_i)>
  // with r_1 uniform and r_i = 0 afterwards.
  const std::vector<std::vector<int>> f_id = {{0}, {1}};
  const std::vector<std::vector<int>> f_not = {{1}, {0}};
  std::vector<RandomizedOracle> oracles = {
      make_standard_xor_oracle(1, 2, f_id, "id"),
      make_standard_xor_oracle(1, 2, f_not, "not"),
  };

  std::map<int, SeedDistribution> tables;
  for (int k = 1; k <= 4; ++k) {
    SeedDistribution dist;
    dist.k = k;
    std::vector<std::int64_t> first(static_cast<std::size_t>(k), 0);
    std::vector<std::int64_t> second = first;
    second[0] = 1;
    dist.support = {first, second};
    dist.weights = {Rational(1, 2), Rational(1, 2)};
    tables.emplace(k, std::move(dist));
  }
  return OracleProblem(std::move(oracles), {"f=id", "f=not"}, {Rational(1, 2), Rational(1, 2)},
                       SeedModel::explicit_tables(std::move(tables)));
}

Scenario scenario_inv_cyc(int N, const Caps& caps) {
  if (N < 4 || N % 2 != 0) {
    throw_contract("the involution-vs-cycle scenario requires even N >= 4 (N=2 is degenerate)");
  }
  const auto involutions = enumerate_fixed_point_free_involutions(N, caps);
  const auto cycles = enumerate_full_cycles(N, caps);
  OracleProblem problem({make_shift_oracle(involutions, "O_INV"), make_shift_oracle(cycles, "O_CYC")},
                        {"INV", "CYC"}, {Rational(1, 2), Rational(1, 2)}, SeedModel::iid());

  Scenario scenario;
  scenario.name = "inv-cyc";
  scenario.parameters["N"] = std::to_string(N);
  scenario.problem = problem;

  for (int k : {1, 2}) {
    scenario.checks.push_back([problem, k, caps]() {
      return expect_verdict("weak-useless-k" + std::to_string(k), "exhaustive decider",
                            weak_classical_useless(problem, k, caps), true);
    });
  }
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("pairwise-one-pair-not-useless", "exhaustive decider",
                          pairwise_classical_useless(problem, 1, caps), false);
  });
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("quantum-k1-not-useless", "exact sigma comparison",
                          quantum_useless(problem, 1, caps), false);
  });
  scenario.checks.push_back([problem]() {
    const auto inv = run_inv_cyc_algorithm(problem.oracle(0));
    const auto cyc = run_inv_cyc_algorithm(problem.oracle(1));
    const bool pass = inv.exact_p_symmetric == 1 && cyc.exact_p_symmetric == Rational(1, 2) &&
                      inv.classification == "INV" && cyc.classification == "CYC";
    return expect("swap-test-probabilities", "exact state simulation", pass,
                  "Pr(symmetric): INV=" + fraction_string(inv.exact_p_symmetric) +
                      " (expected 1/1), CYC=" + fraction_string(cyc.exact_p_symmetric) +
                      " (expected 1/2)");
  });
  scenario.checks.push_back([problem, N]() {
    // (2 Pr(symmetric) - 1) N equals the expected pair-fixing count per class.
    bool pass = true;
    std::string detail;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& oracle = problem.oracle(i);
      const auto report = run_inv_cyc_algorithm(oracle);
      const Rational estimate = (2 * report.exact_p_symmetric - 1) * N;
      Rational expected(0);
      for (auto seed : oracle.seed_support()) {
        const auto& sigma = std::get<Permutation>(oracle.seeds().value(seed));
        expected += oracle.seed_weight(seed) * pair_fixing_count(sigma);
      }
      pass = pass && estimate == expected;
      detail += oracle.name() + ": estimate=" + fraction_string(estimate) +
                " expectation=" + fraction_string(expected) + "  ";
    }
    return expect("transposition-count-diagnostic", "swap-test closed form", pass, detail);
  });
  return scenario;
}

Scenario scenario_parity(int N, const Caps& caps) {
  if (N % 2 != 0) throw_contract("the parity scenario requires even N");
  OracleProblem problem = parity_problem(N);

  Scenario scenario;
  scenario.name = "parity";
  scenario.parameters["N"] = std::to_string(N);
  scenario.problem = problem;

  for (int k = 1; k <= N - 1; ++k) {
    scenario.checks.push_back([problem, k, caps]() {
      return expect_verdict("classical-useless-k" + std::to_string(k), "exhaustive decider",
                            weak_classical_useless(problem, k, caps), true);
    });
  }
  for (int k = 1; k <= N / 2; ++k) {
    const bool expected = k <= N / 2 - 1;
    scenario.checks.push_back([problem, k, caps, expected]() {
      return expect_verdict("quantum-k" + std::to_string(k) + (expected ? "-useless" : "-not-useless"),
                            "exact sigma comparison", quantum_useless(problem, k, caps), expected);
    });
  }
  scenario.checks.push_back([N, caps]() {
    const OracleProblem skewed = parity_problem_skewed(N, Rational(1, 4));
    return expect_verdict("skewed-conditional-k1-not-useless", "exhaustive decider",
                          weak_classical_useless(skewed, 1, caps), false);
  });
  return scenario;
}

Scenario scenario_simon(int n, const Caps& caps, std::uint64_t rng_seed) {
  if (n < 2 || n > 4) throw_contract("the hidden-shift scenario supports n in 2..4");

  Scenario scenario;
  scenario.name = "simon";
  scenario.parameters["n"] = std::to_string(n);

  if (n <= 3) {
    OracleProblem problem = simon_problem(n, caps);
    scenario.problem = problem;
    scenario.checks.push_back([problem, caps]() {
      return expect_verdict("weak-useless-k1", "exhaustive decider",
                            weak_classical_useless(problem, 1, caps), true);
    });
    scenario.checks.push_back([problem, caps]() {
      return expect_verdict("pairwise-one-pair-not-useless", "exhaustive decider",
                            pairwise_classical_useless(problem, 1, caps), false);
    });
  }

  scenario.checks.push_back([n, caps, rng_seed]() {
    const int trials = 100;
    int successes = 0;
    long long total_queries = 0;
    const std::uint32_t q = 1u << n;
    for (int t = 0; t < trials; ++t) {
      const std::uint32_t a = 1u + static_cast<std::uint32_t>(t) % (q - 1u);
      const auto oracle = make_simon_oracle(n, a, caps);
      const auto result = simon_solve(oracle, rng_seed + static_cast<std::uint64_t>(t));
      if (result.recovered == a) ++successes;
      total_queries += result.queries_used;
    }
    return expect("solver-recovers-hidden-vector", "sampled simulation",
                  successes == trials,
                  std::to_string(successes) + "/" + std::to_string(trials) + " recoveries, " +
                      std::to_string(total_queries) + " total queries (cap 50n per run)");
  });
  return scenario;
}

Scenario scenario_hls(int n, const Caps& caps) {
  OracleProblem problem = hls_problem(n, caps);

  Scenario scenario;
  scenario.name = "hls";
  scenario.parameters["n"] = std::to_string(n);
  scenario.problem = problem;

  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("weak-useless-k1", "exhaustive decider over all seeds",
                          weak_classical_useless(problem, 1, caps), true);
  });
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("quantum-k1-not-useless", "exact sigma comparison",
                          quantum_useless(problem, 1, caps), false);
  });
  return scenario;
}

Scenario scenario_balanced_binary(const Caps& caps) {
  OracleProblem problem = balanced_binary_problem();

  Scenario scenario;
  scenario.name = "balanced-binary";
  scenario.problem = problem;

  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("weak-useless-k1", "exhaustive decider",
                          weak_classical_useless(problem, 1, caps), true);
  });
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("weak-not-useless-k2", "exhaustive decider",
                          weak_classical_useless(problem, 2, caps), false);
  });
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("pairwise-one-pair-useless", "exhaustive decider",
                          pairwise_classical_useless(problem, 1, caps), true);
  });
  scenario.checks.push_back([problem, caps]() {
    return expect_verdict("quantum-k1-useless", "exact sigma comparison",
                          quantum_useless(problem, 1, caps), true);
  });
  return scenario;
}

Scenario scenario_amplified(const Scenario& base, int k, const Caps& caps) {
  if (!base.problem.has_value()) throw_contract("amplified scenario requires a base problem");
  const OracleProblem& base_problem = *base.problem;
  if (!weak_classical_useless(base_problem, k, caps).useless) {
    throw_contract("amplification expects the base problem to be weakly useless at k");
  }
  if (quantum_useless(base_problem, k, caps).useless) {
    throw_contract("amplification expects the base problem to be quantum-non-useless at k");
  }
  const OracleProblem amplified = amplify(base_problem, k, caps);

  Scenario scenario;
  scenario.name = "amplified-" + base.name;
  scenario.parameters = base.parameters;
  scenario.parameters["k"] = std::to_string(k);
  scenario.problem = amplified;

  for (int ell : {1, 2}) {
    scenario.checks.push_back([amplified, ell, caps]() {
      return expect_verdict("weak-useless-l" + std::to_string(ell), "exhaustive decider",
                            weak_classical_useless(amplified, ell, caps), true);
    });
  }
  scenario.checks.push_back([amplified, caps]() {
    return expect_verdict("quantum-one-query-not-useless", "exact sigma comparison",
                          quantum_useless(amplified, 1, caps), false);
  });
  scenario.checks.push_back([amplified, caps]() {
    // The 2-query law factors into the product of 1-query laws.
    bool pass = true;
    for (const auto& label : amplified.class_labels()) {
      const TranscriptLaw one = full_transcript_law(amplified, label, 1, caps);
      const TranscriptLaw two = full_transcript_law(amplified, label, 2, caps);
      for (const auto& [query, dist] : two.by_query) {
        const auto& [controls, probes] = query;
        const auto& first = one.by_query.at({{controls[0]}, {probes[0]}});
        const auto& second = one.by_query.at({{controls[1]}, {probes[1]}});
        for (const auto& [outcome, probability] : dist) {
          auto lookup = [](const Distribution& d, int z) {
            const auto it = d.find({z});
            return it == d.end() ? Rational(0) : it->second;
          };
          if (probability != lookup(first, outcome[0]) * lookup(second, outcome[1])) {
            pass = false;
          }
        }
      }
      if (!pass) break;
    }
    return expect("two-query-law-is-product", "exact transcript comparison", pass,
                  pass ? "law(l=2) = law(l=1) x law(l=1) for every class" : "product law violated");
  });
  scenario.checks.push_back([amplified, caps]() {
    // Verdicts survive any strictly positive reweighting of the class prior.
    const auto& labels = amplified.class_labels();
    bool pass = true;
    if (labels.size() == 2) {
      for (const auto& weights : {std::pair{Rational(1, 3), Rational(2, 3)},
                                  std::pair{Rational(1, 5), Rational(4, 5)}}) {
        const OracleProblem reweighted = amplified.with_class_priors(
            {{labels[0], weights.first}, {labels[1], weights.second}});
        pass = pass && weak_classical_useless(reweighted, 1, caps).useless &&
               !quantum_useless(reweighted, 1, caps).useless;
      }
    }
    return expect("verdicts-prior-independent", "decider re-run under skewed priors", pass,
                  "weak/quantum verdicts unchanged under priors 1/3:2/3 and 1/5:4/5");
  });
  return scenario;
}

Scenario scenario_bounded_error(const Scenario& base, int T, const Caps& caps) {
  if (!base.problem.has_value() || base.problem->oracle_count() != 2) {
    throw_contract("the bounded-error scenario expects the two-class swap-test base");
  }
  const OracleProblem& base_problem = *base.problem;
  if (T < 1) throw_contract("repeat_batch requires T >= 1");

  Scenario scenario;
  scenario.name = "bounded-" + base.name;
  scenario.parameters = base.parameters;
  scenario.parameters["T"] = std::to_string(T);

  const bool within_caps =
      encoding_dim_within(base_problem.control_size(), base_problem.target_size(), T,
                          caps.max_state_dim);
  if (within_caps) {
    scenario.problem = repeat_batch(base_problem, T, caps);
  }

  scenario.checks.push_back([base_problem, T]() {
    // One-sided error of "any antisymmetric outcome means CYC" over T
    // independent swap tests: 1 - p_sym^T on the all-symmetric class and
    // p_sym^T on the other.
    const auto inv = run_inv_cyc_algorithm(base_problem.oracle(0));
    const auto cyc = run_inv_cyc_algorithm(base_problem.oracle(1));
    const Rational error_inv =
        Rational(1) - rational_pow(inv.exact_p_symmetric, static_cast<unsigned>(T));
    const Rational error_cyc = rational_pow(cyc.exact_p_symmetric, static_cast<unsigned>(T));
    const Rational expected = rational_pow(Rational(1, 2), static_cast<unsigned>(T));
    const bool pass = error_inv == 0 && error_cyc == expected;
    return expect("one-sided-error-2^-T", "independence product of exact per-query probabilities",
                  pass,
                  "error(INV)=" + fraction_string(error_inv) + ", error(CYC)=" +
                      fraction_string(error_cyc) + ", expected 0 and " + fraction_string(expected));
  });

  scenario.checks.push_back([base_problem, T, caps, batched = scenario.problem]() {
    // Weak uselessness of the batched problem at one query, by the exact
    // product factorization; cross-checked against the exhaustive decider
    // whenever the batch is enumerable.
    const UselessnessVerdict factored = weak_useless_iid_batch(base_problem, T, 1, caps);
    std::string detail = "factorization verdict: useless=" +
                         std::string(factored.useless ? "true" : "false");
    bool pass = factored.useless;
    if (batched.has_value()) {
      const UselessnessVerdict enumerated = weak_classical_useless(*batched, 1, caps);
      pass = pass && enumerated.useless == factored.useless;
      detail += "; exhaustive decider agrees: useless=" +
                std::string(enumerated.useless ? "true" : "false");
    } else {
      detail += "; batch beyond enumeration caps, factorization only";
    }
    return expect("batched-weak-useless-l1", "exact product factorization", pass, detail);
  });
  return scenario;
}

Scenario build_scenario(const ScenarioRequest& request, const Caps& caps) {
  if (request.name == "inv-cyc") {
    return scenario_inv_cyc(request.N.value_or(4), caps);
  }
  if (request.name == "parity") {
    return scenario_parity(request.N.value_or(4), caps);
  }
  if (request.name == "simon") {
    return scenario_simon(request.n.value_or(2), caps, request.rng_seed);
  }
  if (request.name == "hls") {
    return scenario_hls(request.n.value_or(2), caps);
  }
  if (request.name == "balanced-binary") {
    return scenario_balanced_binary(caps);
  }
  if (request.name == "amplified-inv-cyc") {
    return scenario_amplified(scenario_inv_cyc(request.N.value_or(4), caps),
                              request.k.value_or(1), caps);
  }
  if (request.name == "bounded-inv-cyc") {
    return scenario_bounded_error(scenario_inv_cyc(request.N.value_or(4), caps),
                                  request.T.value_or(7), caps);
  }
  throw_input("unknown scenario '" + request.name + "'");
}

std::vector<std::string> scenario_names() {
  return {"inv-cyc", "parity", "simon", "hls", "balanced-binary", "amplified-inv-cyc",
          "bounded-inv-cyc"};
}

}  // namespace olab
