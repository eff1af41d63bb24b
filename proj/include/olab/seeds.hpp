#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "olab/permutation.hpp"
#include "olab/rational.hpp"

namespace olab {

// Seed values are carried by value (not by index) so that an oracle's action
// stays total on a problem-wide union of per-class seed sets.
struct TupleSeed {
  // Indices into a base seed space; one entry per batched sub-query.
  std::vector<std::int64_t> parts;
  bool operator==(const TupleSeed&) const = default;
};

struct AmpSeed {
  // Base-problem oracle index plus a joint seed tuple (indices into the
  // base seed space); the pair is drawn fresh on every amplified query.
  int oracle_index = 0;
  std::vector<std::int64_t> base_seeds;
  bool operator==(const AmpSeed&) const = default;
};

struct OpaqueSeed {
  std::string label;
  bool operator==(const OpaqueSeed&) const = default;
};

using SeedValue = std::variant<std::monostate,       // unit seed of a deterministic oracle
                               Permutation,          // shift / hidden-linear-structure seeds
                               std::vector<int>,     // XOR-family function table (0-based masks)
                               TupleSeed, AmpSeed, OpaqueSeed>;

std::string seed_label(const SeedValue& value);

// Finite set of seed values, either materialized or generated on demand
// (for spaces too large to store, e.g. all valid hidden-shift functions).
class SeedSpace {
 public:
  static std::shared_ptr<const SeedSpace> materialized(std::vector<SeedValue> values);
  static std::shared_ptr<const SeedSpace> generated(std::int64_t count,
                                                    std::function<SeedValue(std::int64_t)> gen);

  std::int64_t size() const { return count_; }
  bool is_materialized() const { return !values_.empty() || count_ == 0; }
  SeedValue value(std::int64_t i) const;
  std::string label(std::int64_t i) const;
  std::optional<std::int64_t> find_label(const std::string& label) const;

 private:
  SeedSpace() = default;
  std::int64_t count_ = 0;
  std::vector<SeedValue> values_;
  std::map<std::string, std::int64_t> by_label_;
  std::function<SeedValue(std::int64_t)> gen_;
};

// Joint distribution R^k over k-tuples of seed indices. Support entries are
// distinct and weights are positive and sum to exactly 1.
struct SeedDistribution {
  int k = 0;
  std::vector<std::vector<std::int64_t>> support;
  std::vector<Rational> weights;

  void validate() const;
};

// How a problem correlates seeds across queries: independent fresh draws,
// one shared draw, or an explicit per-k table.
struct SeedModel {
  enum class Kind { iid, shared, explicit_table };

  Kind kind = Kind::iid;
  std::map<int, SeedDistribution> tables;  // explicit_table only, keyed by k

  static SeedModel iid() { return SeedModel{Kind::iid, {}}; }
  static SeedModel shared() { return SeedModel{Kind::shared, {}}; }
  static SeedModel explicit_tables(std::map<int, SeedDistribution> tables) {
    return SeedModel{Kind::explicit_table, std::move(tables)};
  }
};

// Per-query marginal over a seed space. Explicit weight vectors may carry
// zeros (an oracle's support can be a strict subset of the shared space);
// lazy marginals cover generated spaces whose support cannot be enumerated.
class Marginal {
 public:
  static Marginal uniform();
  static Marginal weights(std::vector<Rational> w);
  static Marginal lazy(std::function<Rational(std::int64_t)> weight_fn);

  bool is_uniform() const { return kind_ == Kind::uniform; }
  bool is_lazy() const { return kind_ == Kind::lazy; }
  const std::vector<Rational>& weight_vector() const;

  Rational weight(std::int64_t index, std::int64_t space_size) const;
  // Indices with positive weight; refuses lazy marginals and oversized spaces.
  std::vector<std::int64_t> support(std::int64_t space_size) const;
  void validate(std::int64_t space_size) const;

 private:
  enum class Kind { uniform, explicit_weights, lazy };
  Kind kind_ = Kind::uniform;
  std::vector<Rational> weights_;
  std::function<Rational(std::int64_t)> weight_fn_;
};

}  // namespace olab
