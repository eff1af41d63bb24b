#include "olab/transforms.hpp"

#include <memory>

#include "olab/errors.hpp"

namespace olab {

namespace {

// base^exp or -1 on overflow past limit.
std::int64_t ipow_capped(std::int64_t base, int exp, std::int64_t limit) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > limit / base) return -1;
    v *= base;
  }
  return v;
}

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

}  // namespace

bool encoding_dim_within(std::int64_t n, std::int64_t m, int k, std::int64_t cap) {
  if (n < 1 || m < 1 || k < 1 || cap < 1) return false;
  if (m > cap / m) return false;
  const std::int64_t m2 = m * m;
  if (n > cap / m2) return false;
  return ipow_capped(n * m2, k, cap) > 0;
}

int lift_pack_control(int x, int y, int target_size) {
  return (x - 1) * target_size + (y - 1) + 1;
}

std::pair<int, int> lift_unpack_control(int packed, int target_size) {
  return {(packed - 1) / target_size + 1, (packed - 1) % target_size + 1};
}

OracleProblem xor_lift(const OracleProblem& problem, TargetGroup group) {
  const int n = problem.control_size();
  const int m = problem.target_size();
  if (group == TargetGroup::bitwise_xor && !is_power_of_two(m)) {
    throw_config("XOR-lift requires a power-of-two target size, got M=" + std::to_string(m) +
                 " (select modular addition instead)");
  }
  std::vector<RandomizedOracle> lifted;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (std::size_t i = 0; i < problem.oracle_count(); ++i) {
    const RandomizedOracle base = problem.oracle(i);
    auto action = [base, m, group](int packed, const SeedValue& seed) {
      const auto [x, y] = lift_unpack_control(packed, m);
      const int v = base.action_value(x, seed).apply(y);
      std::vector<int> images(static_cast<std::size_t>(m));
      for (int z = 1; z <= m; ++z) {
        const int offset = group == TargetGroup::bitwise_xor ? (index0(z) ^ index0(v))
                                                             : (index0(z) + index0(v)) % m;
        images[static_cast<std::size_t>(index0(z))] = value1(offset);
      }
      return Permutation(std::move(images));
    };
    lifted.emplace_back("xor:" + base.name(), n * m, m, base.seeds_ptr(), base.per_query_seed(),
                        std::move(action));
    classes.push_back(problem.class_of(i));
    prior.push_back(problem.prior(i));
  }
  return OracleProblem(std::move(lifted), std::move(classes), std::move(prior),
                       problem.seed_model());
}

OracleProblem amplify(const OracleProblem& problem, int k, const Caps& caps) {
  if (k < 1) throw_contract("amplify requires k >= 1");
  const int n = problem.control_size();
  const int m = problem.target_size();
  if (!encoding_dim_within(n, m, k, caps.max_state_dim) ||
      ipow_capped(n, k, caps.max_state_dim) < 0 || ipow_capped(m, k, caps.max_state_dim) < 0) {
    throw_cap("amplified dimensions exceed the configured state-size cap");
  }
  const auto new_n = static_cast<int>(ipow_capped(n, k, caps.max_state_dim));
  const auto new_m = static_cast<int>(ipow_capped(m, k, caps.max_state_dim));

  // Shared amplified seed space: every (oracle, joint seed tuple) pair.
  std::vector<SeedValue> values;
  std::vector<SeedDistribution> joints;
  joints.reserve(problem.oracle_count());
  for (std::size_t p = 0; p < problem.oracle_count(); ++p) {
    joints.push_back(problem.joint_seeds(p, k));
    for (const auto& tuple : joints.back().support) {
      values.emplace_back(AmpSeed{static_cast<int>(p), tuple});
    }
  }
  auto space = SeedSpace::materialized(std::move(values));

  auto base_oracles = std::make_shared<std::vector<RandomizedOracle>>();
  for (std::size_t p = 0; p < problem.oracle_count(); ++p) {
    base_oracles->push_back(problem.oracle(p));
  }
  auto base_seeds = problem.oracle(0).seeds_ptr();

  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (const auto& label : problem.class_labels()) {
    const auto members = problem.class_members(label);
    if (members.empty()) throw_contract("amplify: class with empty oracle set");
    const Rational class_prior = problem.class_prior(label);

    std::vector<Rational> weights(static_cast<std::size_t>(space->size()), Rational(0));
    std::int64_t offset = 0;
    for (std::size_t p = 0; p < problem.oracle_count(); ++p) {
      const auto& joint = joints[p];
      if (problem.class_of(p) == label) {
        const Rational conditional = problem.prior(p) / class_prior;
        for (std::size_t t = 0; t < joint.support.size(); ++t) {
          weights[static_cast<std::size_t>(offset) + t] = conditional * joint.weights[t];
        }
      }
      offset += static_cast<std::int64_t>(joint.support.size());
    }

    auto action = [base_oracles, base_seeds, n, m, k, new_m](int packed_x, const SeedValue& seed) {
      const auto& amp = std::get<AmpSeed>(seed);
      const auto xs = unpack_tuple(packed_x, n, k);
      std::vector<Permutation> slot(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        slot[static_cast<std::size_t>(i)] =
            base_oracles->at(static_cast<std::size_t>(amp.oracle_index))
                .action_value(xs[static_cast<std::size_t>(i)],
                              base_seeds->value(amp.base_seeds.at(static_cast<std::size_t>(i))));
      }
      std::vector<int> images(static_cast<std::size_t>(new_m));
      for (int packed_y = 1; packed_y <= new_m; ++packed_y) {
        auto ys = unpack_tuple(packed_y, m, k);
        for (int i = 0; i < k; ++i) {
          ys[static_cast<std::size_t>(i)] =
              slot[static_cast<std::size_t>(i)].apply(ys[static_cast<std::size_t>(i)]);
        }
        images[static_cast<std::size_t>(index0(packed_y))] = static_cast<int>(pack_tuple(ys, m));
      }
      return Permutation(std::move(images));
    };

    oracles.emplace_back("amp:" + label, new_n, new_m, space, Marginal::weights(std::move(weights)),
                         std::move(action));
    classes.push_back(label);
    prior.push_back(class_prior);
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

OracleProblem repeat_batch(const OracleProblem& problem, int T, const Caps& caps) {
  if (T < 1) throw_contract("repeat_batch requires T >= 1");
  const int n = problem.control_size();
  const int m = problem.target_size();
  if (!encoding_dim_within(n, m, T, caps.max_state_dim)) {
    throw_cap("batched dimensions exceed the configured state-size cap (override to force)");
  }
  const auto new_n = ipow_capped(n, T, INT64_MAX / 4);
  const auto new_m = ipow_capped(m, T, INT64_MAX / 4);
  if (new_n < 0 || new_m < 0 || new_n > INT32_MAX || new_m > INT32_MAX) {
    throw_cap("batched control/target spaces overflow");
  }

  const auto base_space = problem.oracle(0).seeds_ptr();
  const std::int64_t s = base_space->size();
  const std::int64_t tuple_count = ipow_capped(s, T, INT64_MAX / 4);
  if (tuple_count < 0) throw_cap("batched seed space overflows");

  constexpr std::int64_t kMaterializeLimit = 65536;
  std::shared_ptr<const SeedSpace> space;
  if (tuple_count <= kMaterializeLimit) {
    std::vector<SeedValue> values;
    values.reserve(static_cast<std::size_t>(tuple_count));
    for (std::int64_t i = 0; i < tuple_count; ++i) {
      TupleSeed t;
      t.parts.resize(static_cast<std::size_t>(T));
      std::int64_t rest = i;
      for (int d = T - 1; d >= 0; --d) {
        t.parts[static_cast<std::size_t>(d)] = rest % s;
        rest /= s;
      }
      values.emplace_back(std::move(t));
    }
    space = SeedSpace::materialized(std::move(values));
  } else {
    space = SeedSpace::generated(tuple_count, [s, T](std::int64_t i) {
      TupleSeed t;
      t.parts.resize(static_cast<std::size_t>(T));
      std::int64_t rest = i;
      for (int d = T - 1; d >= 0; --d) {
        t.parts[static_cast<std::size_t>(d)] = rest % s;
        rest /= s;
      }
      return SeedValue(std::move(t));
    });
  }

  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  for (std::size_t p = 0; p < problem.oracle_count(); ++p) {
    const RandomizedOracle base = problem.oracle(p);

    Marginal marginal = Marginal::uniform();
    if (space->is_materialized()) {
      std::vector<Rational> weights;
      weights.reserve(static_cast<std::size_t>(tuple_count));
      for (std::int64_t i = 0; i < tuple_count; ++i) {
        const auto& tuple = std::get<TupleSeed>(space->value(i));
        Rational w(1);
        for (auto part : tuple.parts) w *= base.seed_weight(part);
        weights.push_back(std::move(w));
      }
      marginal = Marginal::weights(std::move(weights));
    } else {
      marginal = Marginal::lazy([base, space](std::int64_t i) {
        const auto& tuple = std::get<TupleSeed>(space->value(i));
        Rational w(1);
        for (auto part : tuple.parts) w *= base.seed_weight(part);
        return w;
      });
    }

    auto action = [base, base_space = base_space, n, m, T,
                   new_m](int packed_x, const SeedValue& seed) {
      const auto& tuple = std::get<TupleSeed>(seed);
      const auto xs = unpack_tuple(packed_x, n, T);
      std::vector<Permutation> slot(static_cast<std::size_t>(T));
      for (int i = 0; i < T; ++i) {
        slot[static_cast<std::size_t>(i)] =
            base.action_value(xs[static_cast<std::size_t>(i)],
                              base_space->value(tuple.parts.at(static_cast<std::size_t>(i))));
      }
      std::vector<int> images(static_cast<std::size_t>(new_m));
      for (int packed_y = 1; packed_y <= static_cast<int>(new_m); ++packed_y) {
        auto ys = unpack_tuple(packed_y, m, T);
        for (int i = 0; i < T; ++i) {
          ys[static_cast<std::size_t>(i)] =
              slot[static_cast<std::size_t>(i)].apply(ys[static_cast<std::size_t>(i)]);
        }
        images[static_cast<std::size_t>(index0(packed_y))] = static_cast<int>(pack_tuple(ys, m));
      }
      return Permutation(std::move(images));
    };

    oracles.emplace_back("batch" + std::to_string(T) + ":" + base.name(),
                         static_cast<int>(new_n), static_cast<int>(new_m), space,
                         std::move(marginal), std::move(action));
    classes.push_back(problem.class_of(p));
    prior.push_back(problem.prior(p));
  }
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), SeedModel::iid());
}

}  // namespace olab
