#include "olab/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "olab/encoding.hpp"
#include "olab/errors.hpp"
#include "olab/oracle_constructors.hpp"
#include "olab/problem_io.hpp"
#include "olab/quantum.hpp"
#include "olab/scenarios.hpp"
#include "olab/transforms.hpp"
#include "olab/uselessness.hpp"

namespace olab {

namespace {

Caps caps_from(const RunConfig& config, ReportDocument& report) {
  Caps caps;
  if (config.max_dim) {
    caps.max_state_dim = *config.max_dim;
    caps.max_transcripts = *config.max_dim;
    report.add_note("cap override: --max-dim=" + std::to_string(*config.max_dim));
  }
  return caps;
}

OracleProblem load_problem(const RunConfig& config, const Caps& caps) {
  if (!config.problem_inline.empty()) return load_problem_text(config.problem_inline, caps);
  if (!config.problem_path.empty()) return load_problem_file(config.problem_path, caps);
  throw_input("this command needs a problem document (--problem or --problem-json)");
}

ScenarioRequest scenario_request(const RunConfig& config) {
  ScenarioRequest request;
  request.name = config.scenario;
  request.N = config.N;
  request.n = config.n;
  request.k = config.k;
  request.T = config.T;
  if (config.rng_seed) request.rng_seed = *config.rng_seed;
  return request;
}

int run_decide(const RunConfig& config, const Caps& caps, ReportDocument& report) {
  const OracleProblem problem = load_problem(config, caps);
  const int k = config.k.value_or(1);
  if (config.kind == "weak") {
    report.add_verdict(weak_classical_useless(problem, k, caps, config.workers));
  } else if (config.kind == "strong") {
    report.add_verdict(strong_classical_useless(problem, k, caps, config.workers));
  } else if (config.kind == "pairwise") {
    report.add_verdict(
        pairwise_classical_useless(problem, config.pairs.value_or(k), caps, config.workers));
  } else if (config.kind == "quantum") {
    report.add_verdict(quantum_useless(problem, k, caps));
  } else if (config.kind == "equivalence") {
    const EquivalenceReport equivalence = check_equivalence_theorem(problem, k, caps);
    report.add_verdict(equivalence.quantum);
    report.add_verdict(equivalence.pairwise);
    report.add_note(std::string("biconditional: ") +
                    (equivalence.biconditional_holds ? "holds" : "VIOLATED"));
    report.add_note(std::string("trace identity: ") +
                    (equivalence.trace_identity_holds ? "holds" : "VIOLATED"));
    if (!equivalence.biconditional_holds || !equivalence.trace_identity_holds) return 3;
  } else if (config.kind == "link") {
    const UnboundedErrorReport link =
        unbounded_error_link(problem, k, config.model == "quantum", false, caps);
    report.add_note(link.note);
    report.add_probability("guessing_baseline", link.guessing_baseline);
    report.inputs["model"] = config.model;
    report.inputs["complexity_greater_than_k"] = link.complexity_greater_than_k;
  } else {
    throw_input("unknown --kind '" + config.kind +
                "' (expected weak|strong|pairwise|quantum|equivalence|link)");
  }
  return 0;
}

int run_simulate(const RunConfig& config, const Caps& caps, ReportDocument& report) {
  if (config.trials > 0 && !config.rng_seed) {
    throw_input("--rng-seed is mandatory whenever --trials > 0");
  }
  const Scenario scenario = build_scenario(scenario_request(config), caps);
  if (config.scenario == "simon") {
    const int n = config.n.value_or(2);
    const int trials = config.trials > 0 ? config.trials : 100;
    const std::uint32_t q = 1u << n;
    int successes = 0;
    long long queries = 0;
    for (int t = 0; t < trials; ++t) {
      const std::uint32_t a = 1u + static_cast<std::uint32_t>(t) % (q - 1u);
      const auto oracle = make_simon_oracle(n, a, caps);
      const auto result = simon_solve(oracle, config.rng_seed.value_or(2024) + t);
      if (result.recovered == a) ++successes;
      queries += result.queries_used;
    }
    report.add_probability("solver_success_rate",
                           Rational(successes, trials));
    report.add_probability("mean_queries", static_cast<double>(queries) / trials);
    return 0;
  }
  if (!scenario.problem.has_value()) {
    throw_input("scenario '" + config.scenario + "' has no sampled mode");
  }
  const OracleProblem& problem = *scenario.problem;
  for (std::size_t i = 0; i < problem.oracle_count(); ++i) {
    const auto& oracle = problem.oracle(i);
    if (oracle.control_size() != oracle.target_size()) {
      throw_input("sampled swap-test mode requires shift oracles with M = N");
    }
    if (config.trials > 0) {
      const auto sampled =
          run_inv_cyc_algorithm_sampled(oracle, config.trials, *config.rng_seed + i);
      report.add_probability("exact_p_symmetric[" + oracle.name() + "]",
                             sampled.exact_p_symmetric);
      report.add_probability("empirical_p_symmetric[" + oracle.name() + "]",
                             *sampled.empirical_p_symmetric);
    } else {
      const auto exact = run_inv_cyc_algorithm(oracle);
      report.add_probability("exact_p_symmetric[" + oracle.name() + "]", exact.exact_p_symmetric);
    }
  }
  return 0;
}

int run_encode(const RunConfig& config, const Caps& caps, ReportDocument& report) {
  const OracleProblem problem = load_problem(config, caps);
  const int k = config.k.value_or(1);
  const int n = problem.control_size();
  const int m = problem.target_size();
  report.add_probability("heralded_success_per_query",
                         Rational(1, static_cast<std::int64_t>(n) * m * m));
  report.add_probability(
      "heralded_success_k_queries",
      rational_pow(Rational(1, static_cast<std::int64_t>(n) * m * m), static_cast<unsigned>(k)));
  for (std::size_t i = 0; i < problem.oracle_count(); ++i) {
    const auto& oracle = problem.oracle(i);
    const auto joint = problem.joint_seeds(i, k);
    const EncodingState encoding = encode_k(oracle, k, joint, caps);
    report.add_note("encoding[" + oracle.name() + "]: dim=" +
                    std::to_string(encoding.state.dim()) + ", nonzeros=" +
                    std::to_string(encoding.state.matrix().nonzero_count()));
    std::vector<PureState> inputs(static_cast<std::size_t>(k), PureState::uniform({n, m}));
    const EncodingSimReport sim = verify_encoding_simulation(oracle, k, joint, inputs, caps);
    if (!sim.states_equal) {
      report.add_note("encoding simulation mismatch for " + oracle.name());
      return 3;
    }
  }
  report.add_note("success-conditioned heralded simulation reproduces the direct k-query state");
  return 0;
}

int run_amplify(const RunConfig& config, const Caps& caps, ReportDocument& report,
                std::ostream& out) {
  const OracleProblem problem = load_problem(config, caps);
  OracleProblem transformed = config.T.has_value() ? repeat_batch(problem, *config.T, caps)
                                                   : amplify(problem, config.k.value_or(1), caps);
  report.add_note(config.T.has_value()
                      ? "repeat_batch with T=" + std::to_string(*config.T)
                      : "amplify with k=" + std::to_string(config.k.value_or(1)));
  const nlohmann::json document = problem_to_json(transformed);
  if (!config.output_path.empty()) {
    std::ofstream file(config.output_path);
    if (!file) throw_input("cannot write '" + config.output_path + "'");
    file << document.dump(2) << "\n";
    report.add_note("transformed problem written to " + config.output_path);
  } else {
    out << document.dump(2) << "\n";
  }
  report.inputs["control_size"] = transformed.control_size();
  report.inputs["target_size"] = transformed.target_size();
  return 0;
}

int run_scenario(const RunConfig& config, const Caps& caps, ReportDocument& report) {
  const Scenario scenario = build_scenario(scenario_request(config), caps);
  bool all_pass = true;
  for (const auto& result : scenario.run_checks()) {
    nlohmann::json check;
    check["name"] = result.name;
    check["basis"] = result.basis;
    check["pass"] = result.pass;
    check["detail"] = result.detail;
    report.verdicts.push_back(std::move(check));
    report.add_note((result.pass ? "PASS " : "FAIL ") + result.name + " [" + result.basis + "]");
    all_pass = all_pass && result.pass;
  }
  for (const auto& [key, value] : scenario.parameters) {
    report.inputs["scenario_" + key] = value;
  }
  if (config.check && !all_pass) return 3;
  return 0;
}

int run_report(const RunConfig& config, ReportDocument& report, std::ostream& out) {
  if (config.report_input.empty()) throw_input("report command needs --input");
  std::ifstream in(config.report_input);
  if (!in) throw_input("cannot open report '" + config.report_input + "'");
  nlohmann::json document = nlohmann::json::parse(in, nullptr, false);
  if (document.is_discarded()) throw_input("report document is not valid JSON");
  report = ReportDocument::from_json(document);
  out << report.to_table(true);
  return 0;
}

void emit(const RunConfig& config, const ReportDocument& report, std::ostream& out) {
  if (config.command == "report") return;  // already rendered
  if (config.format == "document") {
    out << report.canonical_text();
  } else if (config.format == "table") {
    out << report.to_table(true);
  } else if (config.format == "rows") {
    out << report.to_table(false);
  } else {
    throw_input("unknown --format '" + config.format + "' (document|table|rows)");
  }
  if (!config.output_path.empty() && config.command != "amplify") {
    std::ofstream file(config.output_path);
    if (!file) throw_input("cannot write '" + config.output_path + "'");
    file << report.full_json().dump(2) << "\n";
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err, ReportDocument* captured) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument report;
  report.command = config.command;
  report.inputs["format"] = config.format;
  if (config.k) report.inputs["k"] = *config.k;
  if (config.pairs) report.inputs["pairs"] = *config.pairs;
  if (config.T) report.inputs["T"] = *config.T;
  if (config.N) report.inputs["N"] = *config.N;
  if (config.n) report.inputs["n"] = *config.n;
  if (config.trials > 0) report.inputs["trials"] = config.trials;
  if (config.rng_seed) report.inputs["rng_seed"] = *config.rng_seed;
  if (!config.kind.empty()) report.inputs["kind"] = config.kind;
  if (!config.scenario.empty()) report.inputs["scenario"] = config.scenario;
  if (config.workers != 1) report.inputs["workers"] = config.workers;

  int status = 0;
  try {
    const Caps caps = caps_from(config, report);
    if (config.command == "decide") {
      status = run_decide(config, caps, report);
    } else if (config.command == "simulate") {
      status = run_simulate(config, caps, report);
    } else if (config.command == "encode") {
      status = run_encode(config, caps, report);
    } else if (config.command == "amplify") {
      status = run_amplify(config, caps, report, out);
    } else if (config.command == "scenario") {
      status = run_scenario(config, caps, report);
    } else if (config.command == "report") {
      status = run_report(config, report, out);
    } else {
      throw_input("unknown command '" + config.command + "'");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (captured) *captured = report;
    return e.kind() == Error::Kind::cap ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (captured) *captured = report;
    return 1;
  }

  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  emit(config, report, out);
  if (captured) *captured = report;
  return status;
}

}  // namespace olab
