#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "olab/rational.hpp"
#include "olab/uselessness.hpp"

namespace olab {

// Structured run report. The canonical serialization (command, inputs,
// verdicts, probabilities, witnesses, notes) is byte-reproducible for a fixed
// (config, rng_seed) pair; timing lives outside the canonical object.
class ReportDocument {
 public:
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<nlohmann::json> verdicts;
  std::vector<nlohmann::json> probabilities;
  std::vector<nlohmann::json> witnesses;
  std::vector<std::string> notes;
  std::int64_t timing_ms = 0;

  void add_verdict(const UselessnessVerdict& verdict);
  void add_probability(const std::string& name, const Rational& value);
  void add_probability(const std::string& name, double approximate_value);
  void add_note(const std::string& note);

  nlohmann::json canonical_json() const;
  std::string canonical_text() const;         // indent-2 JSON, no timing
  nlohmann::json full_json() const;           // canonical + timing_ms
  std::string to_table(bool header) const;    // comma-separated rows

  static ReportDocument from_json(const nlohmann::json& document);
};

nlohmann::json rational_json(const Rational& value);
nlohmann::json witness_json(const ClassicalWitness& witness);
nlohmann::json witness_json(const QuantumWitness& witness);

}  // namespace olab
