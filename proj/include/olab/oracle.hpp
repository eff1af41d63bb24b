#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "olab/seeds.hpp"

namespace olab {

// One k-query transcript: controls x in [N]^k, probes y in [M]^k and
// observed outcomes z in [M]^k, all 1-based.
struct QueryTuple {
  std::vector<int> controls;
  std::vector<int> probes;
  std::vector<int> outcomes;

  bool operator==(const QueryTuple&) const = default;
};

// An oracle with internal randomness: for control x in [N] and a seed value
// drawn from the per-query marginal, the target register of size M is acted
// on by a permutation. The action is a total function of (x, seed value), so
// oracles stay evaluable over a problem-wide union of seed sets.
class RandomizedOracle {
 public:
  using ActionFn = std::function<Permutation(int x, const SeedValue&)>;

  RandomizedOracle(std::string name, int control_size, int target_size,
                   std::shared_ptr<const SeedSpace> seeds, Marginal per_query_seed,
                   ActionFn action);

  const std::string& name() const { return name_; }
  int control_size() const { return control_size_; }  // N
  int target_size() const { return target_size_; }    // M

  const SeedSpace& seeds() const { return *seeds_; }
  std::shared_ptr<const SeedSpace> seeds_ptr() const { return seeds_; }
  const Marginal& per_query_seed() const { return marginal_; }
  bool deterministic() const { return seeds_->size() == 1; }

  Rational seed_weight(std::int64_t seed_index) const;
  std::vector<std::int64_t> seed_support() const;

  Permutation action(int x, std::int64_t seed_index) const;
  Permutation action_value(int x, const SeedValue& seed) const;

  // Same action over a different (unified) seed space.
  RandomizedOracle with_seed_space(std::shared_ptr<const SeedSpace> seeds,
                                   Marginal marginal) const;

 private:
  std::string name_;
  int control_size_;
  int target_size_;
  std::shared_ptr<const SeedSpace> seeds_;
  Marginal marginal_;
  ActionFn action_;
};

// An oracle problem (C, mu): oracles partitioned into classes with a prior.
// Construction unifies the per-oracle seed spaces into one shared space
// (matching by canonical seed label) and validates all invariants.
class OracleProblem {
 public:
  OracleProblem(std::vector<RandomizedOracle> oracles, std::vector<std::string> classes,
                std::vector<Rational> prior, SeedModel seed_model);

  int control_size() const { return control_size_; }
  int target_size() const { return target_size_; }
  std::size_t oracle_count() const { return oracles_.size(); }
  const RandomizedOracle& oracle(std::size_t i) const { return oracles_.at(i); }
  const std::string& class_of(std::size_t i) const { return classes_.at(i); }
  const Rational& prior(std::size_t i) const { return prior_.at(i); }

  // Distinct class labels in first-appearance order.
  const std::vector<std::string>& class_labels() const { return class_labels_; }
  Rational class_prior(const std::string& label) const;
  std::vector<std::size_t> class_members(const std::string& label) const;

  const SeedModel& seed_model() const { return seed_model_; }
  const SeedSpace& seeds() const { return *oracles_.front().seeds_ptr(); }

  // Joint seed distribution R^k for the given oracle: IID products use the
  // oracle's own marginal, SHARED repeats one draw, EXPLICIT uses the table.
  SeedDistribution joint_seeds(std::size_t oracle_index, int k) const;

  // Same problem with rescaled class priors (within-class conditionals kept).
  OracleProblem with_class_priors(const std::vector<std::pair<std::string, Rational>>& priors) const;

 private:
  void unify_seed_spaces();
  void validate() const;

  std::vector<RandomizedOracle> oracles_;
  std::vector<std::string> classes_;
  std::vector<Rational> prior_;
  std::vector<std::string> class_labels_;
  SeedModel seed_model_;
  int control_size_ = 0;
  int target_size_ = 0;
};

// Row-major packing of 1-based tuples over a fixed alphabet size, used for
// the control/target spaces of amplified and batched oracles.
std::int64_t pack_tuple(const std::vector<int>& tuple_1based, int base);
std::vector<int> unpack_tuple(std::int64_t packed_1based, int base, int length);

}  // namespace olab
