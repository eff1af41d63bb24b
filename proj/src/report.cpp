#include "olab/report.hpp"

#include <sstream>

#include "olab/errors.hpp"

namespace olab {

using nlohmann::json;

json rational_json(const Rational& value) {
  return json{{"num", numerator(value).str()}, {"den", denominator(value).str()}};
}

json witness_json(const ClassicalWitness& witness) {
  json w;
  w["type"] = "classical";
  w["class_a"] = witness.class_a;
  w["class_b"] = witness.class_b;
  w["first"] = {{"controls", witness.first.controls},
                {"probes", witness.first.probes},
                {"outcomes", witness.first.outcomes}};
  if (witness.second) {
    w["second"] = {{"controls", witness.second->controls},
                   {"probes", witness.second->probes},
                   {"outcomes", witness.second->outcomes}};
  }
  if (witness.seed_tuple) {
    w["seed_tuple"] = *witness.seed_tuple;
    w["seed_labels"] = witness.seed_labels;
  }
  w["prob_a"] = rational_json(witness.prob_a);
  w["prob_b"] = rational_json(witness.prob_b);
  return w;
}

json witness_json(const QuantumWitness& witness) {
  json w;
  w["type"] = "quantum";
  w["class_a"] = witness.class_a;
  w["class_b"] = witness.class_b;
  w["row"] = witness.row;
  w["col"] = witness.col;
  w["entry_a"] = rational_json(witness.entry_a);
  w["entry_b"] = rational_json(witness.entry_b);
  return w;
}

void ReportDocument::add_verdict(const UselessnessVerdict& verdict) {
  json v;
  v["kind"] = to_string(verdict.kind);
  v["queries"] = verdict.queries;
  v["useless"] = verdict.useless;
  if (verdict.classical_witness) {
    v["witness"] = witness_json(*verdict.classical_witness);
    witnesses.push_back(witness_json(*verdict.classical_witness));
  }
  if (verdict.quantum_witness) {
    v["witness"] = witness_json(*verdict.quantum_witness);
    witnesses.push_back(witness_json(*verdict.quantum_witness));
  }
  verdicts.push_back(std::move(v));
}

void ReportDocument::add_probability(const std::string& name, const Rational& value) {
  json p;
  p["name"] = name;
  p["num"] = numerator(value).str();
  p["den"] = denominator(value).str();
  probabilities.push_back(std::move(p));
}

void ReportDocument::add_probability(const std::string& name, double approximate_value) {
  json p;
  p["name"] = name;
  p["approx"] = approximate_value;
  probabilities.push_back(std::move(p));
}

void ReportDocument::add_note(const std::string& note) { notes.push_back(note); }

json ReportDocument::canonical_json() const {
  json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["verdicts"] = verdicts;
  doc["probabilities"] = probabilities;
  doc["witnesses"] = witnesses;
  doc["notes"] = notes;
  return doc;
}

std::string ReportDocument::canonical_text() const { return canonical_json().dump(2) + "\n"; }

json ReportDocument::full_json() const {
  json doc = canonical_json();
  doc["timing_ms"] = timing_ms;
  return doc;
}

namespace {

std::string csv_escape(std::string value) {
  for (auto& c : value) {
    if (c == ',') c = ';';
    if (c == '\n') c = ' ';
  }
  return value;
}

}  // namespace

std::string ReportDocument::to_table(bool header) const {
  std::ostringstream out;
  if (header) out << "section,name,value,approx\n";
  out << "command," << csv_escape(command) << ",,\n";
  for (const auto& [key, value] : inputs.items()) {
    out << "input," << csv_escape(key) << "," << csv_escape(value.dump()) << ",\n";
  }
  for (const auto& v : verdicts) {
    out << "verdict," << v.at("kind").get<std::string>() << "@k="
        << v.at("queries").get<int>() << ",useless=" << (v.at("useless").get<bool>() ? "true" : "false")
        << ",\n";
  }
  for (const auto& p : probabilities) {
    if (p.contains("num")) {
      const Rational value(BigInt(p.at("num").get<std::string>()),
                           BigInt(p.at("den").get<std::string>()));
      out << "probability," << csv_escape(p.at("name").get<std::string>()) << ","
          << fraction_string(value) << ",~" << to_double(value) << "\n";
    } else {
      out << "probability," << csv_escape(p.at("name").get<std::string>()) << ",,~"
          << p.at("approx").get<double>() << "\n";
    }
  }
  for (const auto& w : witnesses) {
    out << "witness," << w.at("type").get<std::string>() << "," << csv_escape(w.dump()) << ",\n";
  }
  for (const auto& note : notes) {
    out << "note,," << csv_escape(note) << ",\n";
  }
  return out.str();
}

ReportDocument ReportDocument::from_json(const json& document) {
  ReportDocument report;
  if (!document.is_object() || !document.contains("command")) {
    throw_input("report document: missing 'command'");
  }
  report.command = document.at("command").get<std::string>();
  report.inputs = document.value("inputs", json::object());
  for (const auto& v : document.value("verdicts", json::array())) report.verdicts.push_back(v);
  for (const auto& p : document.value("probabilities", json::array())) {
    report.probabilities.push_back(p);
  }
  for (const auto& w : document.value("witnesses", json::array())) report.witnesses.push_back(w);
  for (const auto& n : document.value("notes", json::array())) {
    report.notes.push_back(n.get<std::string>());
  }
  report.timing_ms = document.value("timing_ms", 0);
  return report;
}

}  // namespace olab
