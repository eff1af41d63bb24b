#include "olab/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "olab/errors.hpp"

namespace olab {

RandomizedOracle::RandomizedOracle(std::string name, int control_size, int target_size,
                                   std::shared_ptr<const SeedSpace> seeds, Marginal per_query_seed,
                                   ActionFn action)
    : name_(std::move(name)),
      control_size_(control_size),
      target_size_(target_size),
      seeds_(std::move(seeds)),
      marginal_(std::move(per_query_seed)),
      action_(std::move(action)) {
  if (control_size_ < 1 || target_size_ < 1) {
    throw_contract("oracle requires N >= 1 and M >= 1");
  }
  if (!seeds_ || seeds_->size() == 0) throw_contract("oracle requires a nonempty seed space");
  marginal_.validate(seeds_->size());
}

Rational RandomizedOracle::seed_weight(std::int64_t seed_index) const {
  return marginal_.weight(seed_index, seeds_->size());
}

std::vector<std::int64_t> RandomizedOracle::seed_support() const {
  return marginal_.support(seeds_->size());
}

Permutation RandomizedOracle::action(int x, std::int64_t seed_index) const {
  return action_value(x, seeds_->value(seed_index));
}

Permutation RandomizedOracle::action_value(int x, const SeedValue& seed) const {
  if (x < 1 || x > control_size_) {
    throw_contract("oracle control " + std::to_string(x) + " outside [1, " +
                   std::to_string(control_size_) + "]");
  }
  Permutation p = action_(x, seed);
  if (p.degree() != target_size_) {
    throw_contract("oracle action returned a permutation of wrong degree");
  }
  return p;
}

RandomizedOracle RandomizedOracle::with_seed_space(std::shared_ptr<const SeedSpace> seeds,
                                                   Marginal marginal) const {
  return RandomizedOracle(name_, control_size_, target_size_, std::move(seeds),
                          std::move(marginal), action_);
}

OracleProblem::OracleProblem(std::vector<RandomizedOracle> oracles, std::vector<std::string> classes,
                             std::vector<Rational> prior, SeedModel seed_model)
    : oracles_(std::move(oracles)),
      classes_(std::move(classes)),
      prior_(std::move(prior)),
      seed_model_(std::move(seed_model)) {
  if (oracles_.empty()) throw_contract("oracle problem requires at least one oracle");
  if (classes_.size() != oracles_.size() || prior_.size() != oracles_.size()) {
    throw_contract("oracle/class/prior lists must have equal length");
  }
  control_size_ = oracles_.front().control_size();
  target_size_ = oracles_.front().target_size();
  for (const auto& c : classes_) {
    if (std::find(class_labels_.begin(), class_labels_.end(), c) == class_labels_.end()) {
      class_labels_.push_back(c);
    }
  }
  unify_seed_spaces();
  validate();
}

void OracleProblem::unify_seed_spaces() {
  bool all_same = true;
  for (const auto& o : oracles_) {
    if (o.seeds_ptr() != oracles_.front().seeds_ptr()) all_same = false;
  }
  if (all_same) return;

  for (const auto& o : oracles_) {
    if (!o.seeds().is_materialized()) {
      throw_contract("oracles with generated seed spaces must share one seed space object");
    }
  }

  // Union of seed values by canonical label, in first-appearance order.
  std::vector<SeedValue> union_values;
  std::map<std::string, std::int64_t> position;
  for (const auto& o : oracles_) {
    for (std::int64_t i = 0; i < o.seeds().size(); ++i) {
      auto label = o.seeds().label(i);
      if (position.emplace(label, static_cast<std::int64_t>(union_values.size())).second) {
        union_values.push_back(o.seeds().value(i));
      }
    }
  }
  auto union_space = SeedSpace::materialized(std::move(union_values));

  for (auto& o : oracles_) {
    std::vector<Rational> weights(static_cast<std::size_t>(union_space->size()), Rational(0));
    for (std::int64_t i = 0; i < o.seeds().size(); ++i) {
      weights[static_cast<std::size_t>(position.at(o.seeds().label(i)))] = o.seed_weight(i);
    }
    o = o.with_seed_space(union_space, Marginal::weights(std::move(weights)));
  }
}

void OracleProblem::validate() const {
  std::set<std::string> oracle_names;
  for (const auto& o : oracles_) {
    if (o.control_size() != control_size_ || o.target_size() != target_size_) {
      throw_contract("all oracles in a problem must agree on N and M");
    }
    if (!oracle_names.insert(o.name()).second) {
      throw_contract("duplicate oracle name '" + o.name() + "'");
    }
  }
  Rational total(0);
  for (const auto& p : prior_) {
    if (p <= 0) throw_contract("prior weights must be positive");
    total += p;
  }
  if (total != 1) {
    Rational deficit = Rational(1) - total;
    throw_contract("prior weights sum to " + fraction_string(total) + " (deficit " +
                   fraction_string(deficit) + "), expected exactly 1");
  }

  if (seed_model_.kind == SeedModel::Kind::explicit_table) {
    const auto size = seeds().size();
    for (const auto& [k, table] : seed_model_.tables) {
      if (table.k != k) throw_contract("explicit seed table key differs from its tuple length");
      table.validate();
      for (const auto& tuple : table.support) {
        for (auto idx : tuple) {
          if (idx < 0 || idx >= size) {
            throw_contract("explicit seed table references seed index outside the shared space");
          }
        }
      }
    }
  }
}

Rational OracleProblem::class_prior(const std::string& label) const {
  Rational total(0);
  bool found = false;
  for (std::size_t i = 0; i < oracles_.size(); ++i) {
    if (classes_[i] == label) {
      total += prior_[i];
      found = true;
    }
  }
  if (!found) throw_contract("unknown class label '" + label + "'");
  return total;
}

std::vector<std::size_t> OracleProblem::class_members(const std::string& label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < oracles_.size(); ++i) {
    if (classes_[i] == label) out.push_back(i);
  }
  if (out.empty()) throw_contract("unknown class label '" + label + "'");
  return out;
}

SeedDistribution OracleProblem::joint_seeds(std::size_t oracle_index, int k) const {
  if (k < 1) throw_contract("joint seed distribution requires k >= 1");
  const auto& oracle = oracles_.at(oracle_index);
  SeedDistribution dist;
  dist.k = k;

  switch (seed_model_.kind) {
    case SeedModel::Kind::iid: {
      const auto support = oracle.seed_support();
      double planned = 1.0;
      for (int i = 0; i < k; ++i) planned *= static_cast<double>(support.size());
      if (planned > 10'000'000.0) {
        throw_cap("IID joint seed support of ~" + std::to_string(planned) +
                  " tuples is too large to enumerate");
      }
      std::vector<std::int64_t> tuple(static_cast<std::size_t>(k), support.front());
      std::vector<std::size_t> digits(static_cast<std::size_t>(k), 0);
      while (true) {
        Rational w(1);
        for (int i = 0; i < k; ++i) {
          tuple[static_cast<std::size_t>(i)] = support[digits[static_cast<std::size_t>(i)]];
          w *= oracle.seed_weight(tuple[static_cast<std::size_t>(i)]);
        }
        dist.support.push_back(tuple);
        dist.weights.push_back(w);
        int pos = k - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == support.size()) {
          digits[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
      break;
    }
    case SeedModel::Kind::shared: {
      for (auto idx : oracle.seed_support()) {
        dist.support.push_back(std::vector<std::int64_t>(static_cast<std::size_t>(k), idx));
        dist.weights.push_back(oracle.seed_weight(idx));
      }
      break;
    }
    case SeedModel::Kind::explicit_table: {
      auto it = seed_model_.tables.find(k);
      if (it == seed_model_.tables.end()) {
        throw_input("explicit seed model has no table for k=" + std::to_string(k));
      }
      return it->second;
    }
  }
  dist.validate();
  return dist;
}

OracleProblem OracleProblem::with_class_priors(
    const std::vector<std::pair<std::string, Rational>>& priors) const {
  std::map<std::string, Rational> target(priors.begin(), priors.end());
  Rational total(0);
  for (const auto& [label, p] : target) {
    if (p <= 0) throw_contract("class priors must stay positive under reweighting");
    total += p;
  }
  if (target.size() != class_labels_.size() || total != 1) {
    throw_contract("class prior reweighting must cover every class and sum to 1");
  }
  std::vector<Rational> new_prior = prior_;
  for (std::size_t i = 0; i < oracles_.size(); ++i) {
    const Rational old_class = class_prior(classes_[i]);
    new_prior[i] = prior_[i] / old_class * target.at(classes_[i]);
  }
  return OracleProblem(oracles_, classes_, std::move(new_prior), seed_model_);
}

std::int64_t pack_tuple(const std::vector<int>& tuple_1based, int base) {
  std::int64_t packed = 0;
  for (int v : tuple_1based) {
    if (v < 1 || v > base) throw_contract("tuple component outside alphabet");
    packed = packed * base + index0(v);
  }
  return packed + 1;
}

std::vector<int> unpack_tuple(std::int64_t packed_1based, int base, int length) {
  std::int64_t rest = packed_1based - 1;
  if (rest < 0) throw_contract("packed tuple value must be >= 1");
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = value1(static_cast<int>(rest % base));
    rest /= base;
  }
  if (rest != 0) throw_contract("packed tuple value outside range");
  return out;
}

}  // namespace olab
