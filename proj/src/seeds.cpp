#include "olab/seeds.hpp"

#include <set>

#include "olab/errors.hpp"

namespace olab {

std::string seed_label(const SeedValue& value) {
  struct Visitor {
    std::string operator()(const std::monostate&) const { return "unit"; }
    std::string operator()(const Permutation& p) const { return "p:" + p.one_line(); }
    std::string operator()(const std::vector<int>& f) const {
      std::string s = "f:";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
      }
      return s;
    }
    std::string operator()(const TupleSeed& t) const {
      std::string s = "t:";
      for (std::size_t i = 0; i < t.parts.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(t.parts[i]);
      }
      return s;
    }
    std::string operator()(const AmpSeed& a) const {
      std::string s = "a:" + std::to_string(a.oracle_index) + ";";
      for (std::size_t i = 0; i < a.base_seeds.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(a.base_seeds[i]);
      }
      return s;
    }
    std::string operator()(const OpaqueSeed& o) const { return o.label; }
  };
  return std::visit(Visitor{}, value);
}

std::shared_ptr<const SeedSpace> SeedSpace::materialized(std::vector<SeedValue> values) {
  auto space = std::shared_ptr<SeedSpace>(new SeedSpace());
  space->count_ = static_cast<std::int64_t>(values.size());
  space->values_ = std::move(values);
  for (std::int64_t i = 0; i < space->count_; ++i) {
    auto [it, inserted] = space->by_label_.emplace(seed_label(space->values_[i]), i);
    if (!inserted) throw_contract("duplicate seed value '" + it->first + "' in seed space");
  }
  return space;
}

std::shared_ptr<const SeedSpace> SeedSpace::generated(std::int64_t count,
                                                      std::function<SeedValue(std::int64_t)> gen) {
  if (count < 0) throw_contract("generated seed space needs a nonnegative count");
  auto space = std::shared_ptr<SeedSpace>(new SeedSpace());
  space->count_ = count;
  space->gen_ = std::move(gen);
  return space;
}

SeedValue SeedSpace::value(std::int64_t i) const {
  if (i < 0 || i >= count_) throw_contract("seed index out of range");
  if (is_materialized()) return values_[static_cast<std::size_t>(i)];
  return gen_(i);
}

std::string SeedSpace::label(std::int64_t i) const { return seed_label(value(i)); }

std::optional<std::int64_t> SeedSpace::find_label(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

void SeedDistribution::validate() const {
  if (support.size() != weights.size()) {
    throw_contract("seed distribution support/weights size mismatch");
  }
  if (support.empty()) throw_contract("seed distribution has empty support");
  Rational total(0);
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (static_cast<int>(support[i].size()) != k) {
      throw_contract("seed tuple length differs from k");
    }
    if (!seen.insert(support[i]).second) throw_contract("duplicate seed tuple in support");
    if (weights[i] <= 0) throw_contract("seed distribution weights must be positive");
    total += weights[i];
  }
  if (total != 1) {
    throw_contract("seed distribution weights sum to " + fraction_string(total) + ", expected 1");
  }
}

Marginal Marginal::uniform() { return Marginal{}; }

Marginal Marginal::weights(std::vector<Rational> w) {
  Marginal m;
  m.kind_ = Kind::explicit_weights;
  m.weights_ = std::move(w);
  return m;
}

Marginal Marginal::lazy(std::function<Rational(std::int64_t)> weight_fn) {
  Marginal m;
  m.kind_ = Kind::lazy;
  m.weight_fn_ = std::move(weight_fn);
  return m;
}

const std::vector<Rational>& Marginal::weight_vector() const {
  if (kind_ != Kind::explicit_weights) {
    throw_contract("marginal has no explicit weight vector");
  }
  return weights_;
}

Rational Marginal::weight(std::int64_t index, std::int64_t space_size) const {
  switch (kind_) {
    case Kind::uniform:
      return Rational(1, space_size);
    case Kind::explicit_weights:
      if (index < 0 || index >= static_cast<std::int64_t>(weights_.size())) {
        throw_contract("marginal index out of range");
      }
      return weights_[static_cast<std::size_t>(index)];
    case Kind::lazy:
      return weight_fn_(index);
  }
  throw_contract("unreachable marginal kind");
}

std::vector<std::int64_t> Marginal::support(std::int64_t space_size) const {
  constexpr std::int64_t kSupportEnumerationLimit = 10'000'000;
  if (kind_ == Kind::lazy) {
    throw_cap("seed marginal support is not enumerable for this oracle");
  }
  if (kind_ == Kind::uniform && space_size > kSupportEnumerationLimit) {
    throw_cap("seed support of size " + std::to_string(space_size) + " is too large to enumerate");
  }
  std::vector<std::int64_t> out;
  if (kind_ == Kind::uniform) {
    out.resize(static_cast<std::size_t>(space_size));
    for (std::int64_t i = 0; i < space_size; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
  }
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(weights_.size()); ++i) {
    if (weights_[static_cast<std::size_t>(i)] > 0) out.push_back(i);
  }
  return out;
}

void Marginal::validate(std::int64_t space_size) const {
  if (kind_ == Kind::lazy) return;  // validated by construction at the call site
  if (kind_ == Kind::uniform) {
    if (space_size <= 0) throw_contract("uniform marginal over empty seed space");
    return;
  }
  if (static_cast<std::int64_t>(weights_.size()) != space_size) {
    throw_contract("marginal weight vector length differs from seed space size");
  }
  Rational total(0);
  bool any_positive = false;
  for (const auto& w : weights_) {
    if (w < 0) throw_contract("marginal weights must be nonnegative");
    if (w > 0) any_positive = true;
    total += w;
  }
  if (!any_positive) throw_contract("marginal has empty support");
  if (total != 1) {
    throw_contract("marginal weights sum to " + fraction_string(total) + ", expected 1");
  }
}

}  // namespace olab
