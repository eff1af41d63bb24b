// Command-line front end for the oracle laboratory.
//
//   oraclelab decide   --kind weak --k 2 --problem spec.json
//   oraclelab scenario --name inv-cyc --N 4 --check
//   oraclelab simulate --scenario inv-cyc --N 4 --trials 10000 --rng-seed 7
//   oraclelab encode   --problem spec.json --k 1
//   oraclelab amplify  --problem spec.json --k 1 --output amplified.json
//   oraclelab report   --input report.json

#include <CLI11.hpp>

#include <iostream>

#include "olab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"oraclelab: exact experiments with permutation oracles with internal randomness"};
  app.require_subcommand(1);

  olab::RunConfig config;
  std::uint64_t rng_seed = 0;
  std::int64_t max_dim = 0;
  int N = 0, n = 0, k = 0, pairs = 0, T = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format: document|table|rows");
    cmd->add_option("--output", config.output_path, "Write the full report (with timing) here");
    cmd->add_option("--max-dim", max_dim, "Override the state-size/transcript caps");
    cmd->add_option("--workers", config.workers, "Parallel workers for decider scans");
  };
  auto add_problem = [&](CLI::App* cmd) {
    cmd->add_option("--problem", config.problem_path, "Problem-specification JSON file");
    cmd->add_option("--problem-json", config.problem_inline, "Inline problem JSON text");
  };

  auto* decide = app.add_subcommand("decide", "Run a uselessness decider on a problem document");
  decide->add_option("--kind", config.kind, "weak|strong|pairwise|quantum|equivalence|link")
      ->required();
  decide->add_option("--k", k, "Query count (quantum: encoded copies)");
  decide->add_option("--pairs", pairs, "Pair count for the pairwise decider");
  decide->add_option("--model", config.model, "link: classical|quantum");
  add_problem(decide);
  add_common(decide);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo runs of the quantum algorithms");
  simulate->add_option("--scenario", config.scenario, "inv-cyc|simon")->required();
  simulate->add_option("--N", N, "Problem size for inv-cyc");
  simulate->add_option("--n", n, "Bit width for simon");
  simulate->add_option("--trials", config.trials, "Number of sampled runs");
  simulate->add_option("--rng-seed", rng_seed, "Deterministic RNG seed (required with --trials)");
  add_common(simulate);

  auto* encode = app.add_subcommand("encode", "Build oracle encodings and verify heralded retrieval");
  encode->add_option("--k", k, "Number of encoded query slots");
  add_problem(encode);
  add_common(encode);

  auto* amplify = app.add_subcommand("amplify", "Emit the amplified (--k) or batched (--T) problem");
  amplify->add_option("--k", k, "Amplification batch size");
  amplify->add_option("--T", T, "Repetition count (repeat-batch transform)");
  add_problem(amplify);
  add_common(amplify);

  auto* scenario = app.add_subcommand("scenario", "Run a named scenario's expectation checks");
  scenario->add_option("--name", config.scenario, "Scenario name")->required();
  scenario->add_option("--N", N, "Problem size (inv-cyc, parity)");
  scenario->add_option("--n", n, "Bit width (simon, hls)");
  scenario->add_option("--k", k, "Amplification parameter");
  scenario->add_option("--T", T, "Batch repetition count");
  scenario->add_option("--rng-seed", rng_seed, "RNG seed for sampled checks");
  scenario->add_flag("--check", config.check, "Exit 3 when any expectation fails");
  add_common(scenario);

  auto* report = app.add_subcommand("report", "Re-render a saved report as a table");
  report->add_option("--input", config.report_input, "Report JSON file")->required();
  add_common(report);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  if (N > 0) config.N = N;
  if (n > 0) config.n = n;
  if (k > 0) config.k = k;
  if (pairs > 0) config.pairs = pairs;
  if (T > 0) config.T = T;
  if (max_dim > 0) config.max_dim = max_dim;
  if (simulate->count("--rng-seed") > 0 || scenario->count("--rng-seed") > 0) {
    config.rng_seed = rng_seed;
  }

  return olab::run(config, std::cout, std::cerr);
}
