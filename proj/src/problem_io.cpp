#include "olab/problem_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "olab/errors.hpp"
#include "olab/gf2n.hpp"
#include "olab/oracle_constructors.hpp"

namespace olab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw_input("problem document: " + path + ": " + message);
}

const json& require(const json& node, const std::string& key, const std::string& path) {
  if (!node.is_object() || !node.contains(key)) fail(path, "missing field '" + key + "'");
  return node.at(key);
}

int require_int(const json& node, const std::string& key, const std::string& path) {
  const auto& v = require(node, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& node, const std::string& key, const std::string& path) {
  const auto& v = require(node, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Rational require_fraction(const json& node, const std::string& key, const std::string& path) {
  return parse_rational(require_string(node, key, path));
}

SeedModel parse_seed_model(const json& node, const std::string& path) {
  const std::string kind = require_string(node, "kind", path);
  if (kind == "iid") return SeedModel::iid();
  if (kind == "shared") return SeedModel::shared();
  if (kind != "explicit") fail(path + ".kind", "expected iid, shared or explicit");

  std::map<int, SeedDistribution> tables;
  for (const auto& table : require(node, "tables", path)) {
    SeedDistribution dist;
    dist.k = require_int(table, "k", path + ".tables[]");
    for (const auto& tuple : require(table, "support", path + ".tables[]")) {
      std::vector<std::int64_t> entry;
      for (const auto& v : tuple) entry.push_back(v.get<std::int64_t>());
      dist.support.push_back(std::move(entry));
    }
    for (const auto& w : require(table, "weights", path + ".tables[]")) {
      dist.weights.push_back(parse_rational(w.get<std::string>()));
    }
    tables.emplace(dist.k, std::move(dist));
  }
  return SeedModel::explicit_tables(std::move(tables));
}

std::vector<Permutation> parse_perm_list(const json& node, const std::string& path) {
  std::vector<Permutation> perms;
  for (const auto& images : node) {
    std::vector<int> v;
    for (const auto& e : images) v.push_back(e.get<int>());
    perms.emplace_back(std::move(v));
  }
  if (perms.empty()) fail(path, "empty permutation list");
  return perms;
}

RandomizedOracle parse_constructor_oracle(const json& ctor, const std::string& name, int n, int m,
                                          const Caps& caps, const std::string& path) {
  const std::string kind = require_string(ctor, "kind", path);
  if (kind == "shift-class") {
    const int degree = require_int(ctor, "N", path);
    if (degree != n || degree != m) fail(path, "shift oracles require the document's N = M");
    const std::string family = require_string(ctor, "family", path);
    if (family == "involutions") {
      return make_shift_oracle(enumerate_fixed_point_free_involutions(degree, caps), name);
    }
    if (family == "cycles") {
      return make_shift_oracle(enumerate_full_cycles(degree, caps), name);
    }
    if (family == "all") {
      return make_shift_oracle(enumerate_all_permutations(degree, caps), name);
    }
    fail(path + ".family", "expected involutions, cycles or all");
  }
  if (kind == "shift-perms") {
    auto perms = parse_perm_list(require(ctor, "perms", path), path + ".perms");
    if (perms.front().degree() != n || n != m) {
      fail(path, "shift oracles require the document's N = M = permutation degree");
    }
    return make_shift_oracle(perms, name);
  }
  if (kind == "xor-family") {
    std::vector<std::vector<int>> functions;
    for (const auto& f : require(ctor, "functions", path)) {
      functions.push_back(f.get<std::vector<int>>());
    }
    const TargetGroup group =
        ctor.value("group", std::string("xor")) == "mod-add" ? TargetGroup::modular_add
                                                             : TargetGroup::bitwise_xor;
    return make_standard_xor_oracle(n, m, functions, name, group);
  }
  if (kind == "simon") {
    const int degree = require_int(ctor, "n", path);
    const auto a = static_cast<std::uint32_t>(require_int(ctor, "a", path));
    if ((1 << degree) != n || n != m) fail(path, "simon oracles require N = M = 2^n");
    return make_simon_oracle(degree, a, caps);
  }
  if (kind == "hls") {
    const int degree = require_int(ctor, "n", path);
    const auto s = static_cast<std::uint32_t>(require_int(ctor, "s", path));
    if (static_cast<int>(gf2n_order(degree)) != n || n != m) {
      fail(path, "hls oracles require N = M = 2^n");
    }
    return make_hls_oracle(degree, make_field_element(degree, s), caps);
  }
  fail(path + ".kind", "unknown constructor '" + kind + "'");
}

RandomizedOracle parse_explicit_oracle(const json& action, const std::string& name, int n, int m,
                                       const std::string& path) {
  const auto& table_json = require(action, "table", path);
  if (!table_json.is_array() || table_json.empty()) fail(path + ".table", "expected seed tables");

  std::vector<std::string> labels;
  if (action.contains("seeds")) {
    for (const auto& s : action.at("seeds")) labels.push_back(s.get<std::string>());
  } else {
    for (std::size_t i = 0; i < table_json.size(); ++i) labels.push_back("s" + std::to_string(i));
  }
  if (labels.size() != table_json.size()) {
    fail(path, "seed label count differs from table size");
  }

  std::map<std::string, std::vector<Permutation>> table;
  std::vector<SeedValue> seeds;
  for (std::size_t r = 0; r < table_json.size(); ++r) {
    const auto& per_x = table_json.at(r);
    if (static_cast<int>(per_x.size()) != n) fail(path + ".table", "need one row per control x");
    std::vector<Permutation> perms;
    for (const auto& images : per_x) {
      std::vector<int> v;
      for (const auto& e : images) v.push_back(e.get<int>());
      if (static_cast<int>(v.size()) != m) fail(path + ".table", "permutation length differs from M");
      perms.emplace_back(std::move(v));
    }
    table.emplace(labels[r], std::move(perms));
    seeds.emplace_back(OpaqueSeed{labels[r]});
  }

  auto space = SeedSpace::materialized(std::move(seeds));
  std::vector<Rational> weights(labels.size(),
                                Rational(1, static_cast<std::int64_t>(labels.size())));
  if (action.contains("weights")) {
    weights.clear();
    for (const auto& w : action.at("weights")) weights.push_back(parse_rational(w.get<std::string>()));
  }
  auto fn = [table](int x, const SeedValue& seed) -> Permutation {
    const auto& label = std::get<OpaqueSeed>(seed).label;
    const auto it = table.find(label);
    if (it == table.end()) {
      throw_contract("explicit oracle has no action for seed '" + label + "'");
    }
    return it->second.at(static_cast<std::size_t>(index0(x)));
  };
  return RandomizedOracle(name, n, m, std::move(space), Marginal::weights(std::move(weights)),
                          std::move(fn));
}

}  // namespace

OracleProblem problem_from_json(const nlohmann::json& document, const Caps& caps) {
  if (!document.is_object()) throw_input("problem document: expected a JSON object");
  const int version = require_int(document, "version", "$");
  if (version != 1) fail("$.version", "unsupported version " + std::to_string(version));
  const int n = require_int(document, "N", "$");
  const int m = require_int(document, "M", "$");
  const SeedModel model = parse_seed_model(require(document, "seed_model", "$"), "$.seed_model");

  const auto& oracles_json = require(document, "oracles", "$");
  if (!oracles_json.is_array() || oracles_json.empty()) fail("$.oracles", "expected oracle entries");

  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  Rational prior_sum(0);
  for (std::size_t i = 0; i < oracles_json.size(); ++i) {
    const auto& entry = oracles_json.at(i);
    const std::string path = "$.oracles[" + std::to_string(i) + "]";
    const std::string name = entry.value("name", "oracle" + std::to_string(i));
    classes.push_back(require_string(entry, "class", path));
    prior.push_back(require_fraction(entry, "prior", path));
    prior_sum += prior.back();
    if (entry.contains("constructor")) {
      oracles.push_back(
          parse_constructor_oracle(entry.at("constructor"), name, n, m, caps, path + ".constructor"));
    } else if (entry.contains("action")) {
      oracles.push_back(parse_explicit_oracle(entry.at("action"), name, n, m, path + ".action"));
    } else {
      fail(path, "each oracle needs a 'constructor' or an explicit 'action'");
    }
  }
  if (prior_sum != 1) {
    throw_input("problem document: prior weights sum to " + fraction_string(prior_sum) +
                "; deficit " + fraction_string(Rational(1) - prior_sum) + " (expected exactly 1)");
  }
  try {
    return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), model);
  } catch (const Error& e) {
    if (e.kind() == Error::Kind::contract) throw_input(std::string("problem document: ") + e.what());
    throw;
  }
}

OracleProblem load_problem_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw_input("cannot open problem file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_problem_text(buffer.str(), caps);
}

OracleProblem load_problem_text(const std::string& text, const Caps& caps) {
  nlohmann::json document = nlohmann::json::parse(text, nullptr, false);
  if (document.is_discarded()) throw_input("problem document is not valid JSON");
  return problem_from_json(document, caps);
}

nlohmann::json problem_to_json(const OracleProblem& problem) {
  const auto& space = problem.seeds();
  if (!space.is_materialized()) {
    throw_cap("cannot serialize a problem whose seed space is generated on demand");
  }
  json document;
  document["version"] = 1;
  document["N"] = problem.control_size();
  document["M"] = problem.target_size();

  json model;
  switch (problem.seed_model().kind) {
    case SeedModel::Kind::iid:
      model["kind"] = "iid";
      break;
    case SeedModel::Kind::shared:
      model["kind"] = "shared";
      break;
    case SeedModel::Kind::explicit_table: {
      model["kind"] = "explicit";
      json tables = json::array();
      for (const auto& [k, dist] : problem.seed_model().tables) {
        json t;
        t["k"] = k;
        t["support"] = dist.support;
        json weights = json::array();
        for (const auto& w : dist.weights) weights.push_back(fraction_string(w));
        t["weights"] = std::move(weights);
        tables.push_back(std::move(t));
      }
      model["tables"] = std::move(tables);
      break;
    }
  }
  document["seed_model"] = std::move(model);

  std::vector<std::string> labels;
  for (std::int64_t i = 0; i < space.size(); ++i) labels.push_back(space.label(i));

  json oracles = json::array();
  for (std::size_t i = 0; i < problem.oracle_count(); ++i) {
    const auto& oracle = problem.oracle(i);
    json entry;
    entry["name"] = oracle.name();
    entry["class"] = problem.class_of(i);
    entry["prior"] = fraction_string(problem.prior(i));
    json action;
    action["seeds"] = labels;
    json table = json::array();
    json weights = json::array();
    for (std::int64_t seed = 0; seed < space.size(); ++seed) {
      weights.push_back(fraction_string(oracle.seed_weight(seed)));
      json per_x = json::array();
      for (int x = 1; x <= problem.control_size(); ++x) {
        per_x.push_back(oracle.action(x, seed).images());
      }
      table.push_back(std::move(per_x));
    }
    action["table"] = std::move(table);
    action["weights"] = std::move(weights);
    entry["action"] = std::move(action);
    oracles.push_back(std::move(entry));
  }
  document["oracles"] = std::move(oracles);
  return document;
}

bool structurally_equal(const OracleProblem& a, const OracleProblem& b) {
  if (a.control_size() != b.control_size() || a.target_size() != b.target_size()) return false;
  if (a.oracle_count() != b.oracle_count()) return false;
  if (!a.seeds().is_materialized() || !b.seeds().is_materialized()) return false;
  if (a.seeds().size() != b.seeds().size()) return false;

  // Reorder b's seeds to a's by canonical label.
  std::vector<std::int64_t> remap(static_cast<std::size_t>(a.seeds().size()));
  for (std::int64_t i = 0; i < a.seeds().size(); ++i) {
    const auto pos = b.seeds().find_label(a.seeds().label(i));
    if (!pos) return false;
    remap[static_cast<std::size_t>(i)] = *pos;
  }

  for (std::size_t o = 0; o < a.oracle_count(); ++o) {
    if (a.class_of(o) != b.class_of(o) || a.prior(o) != b.prior(o)) return false;
    for (std::int64_t seed = 0; seed < a.seeds().size(); ++seed) {
      const auto b_seed = remap[static_cast<std::size_t>(seed)];
      if (a.oracle(o).seed_weight(seed) != b.oracle(o).seed_weight(b_seed)) return false;
      if (a.oracle(o).seed_weight(seed) == 0) continue;
      for (int x = 1; x <= a.control_size(); ++x) {
        if (a.oracle(o).action(x, seed) != b.oracle(o).action(x, b_seed)) return false;
      }
    }
  }
  return true;
}

}  // namespace olab
