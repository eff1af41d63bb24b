#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "olab/report.hpp"

namespace olab {

// One CLI invocation. Exit contract: 0 completed, 1 invalid input or
// configuration, 2 capacity refusal, 3 scenario expectation mismatch in
// --check mode (and equivalence-theorem violations, which must never fire).
struct RunConfig {
  std::string command;  // decide | simulate | encode | amplify | scenario | report

  std::string problem_path;
  std::string problem_inline;  // raw JSON text, alternative to a file

  std::string kind;  // decide: weak | strong | pairwise | quantum | equivalence | link
  std::string model = "classical";  // link: classical | quantum

  std::string scenario;  // scenario/simulate name
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> pairs;
  std::optional<int> T;

  int trials = 0;
  std::optional<std::uint64_t> rng_seed;
  int workers = 1;
  std::optional<std::int64_t> max_dim;

  std::string format = "document";  // document | table | rows
  bool check = false;
  std::string output_path;
  std::string report_input;  // report command: canonical document to re-render
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err,
        ReportDocument* captured = nullptr);

}  // namespace olab
