#include <doctest.h>

#include <map>
#include <set>

#include "olab/errors.hpp"
#include "olab/oracle_constructors.hpp"
#include "olab/scenarios.hpp"
#include "olab/transforms.hpp"
#include "olab/uselessness.hpp"
#include "test_util.hpp"

using namespace olab;

TEST_SUITE_BEGIN("oracle-model");

namespace {

OracleProblem inv_cyc_problem(int n) {
  return OracleProblem({make_shift_oracle(enumerate_fixed_point_free_involutions(n), "O_INV"),
                        make_shift_oracle(enumerate_full_cycles(n), "O_CYC")},
                       {"INV", "CYC"}, {Rational(1, 2), Rational(1, 2)}, SeedModel::iid());
}

// Distribution of the target outcome for a single query at (x, y).
std::map<int, Rational> outcome_distribution(const RandomizedOracle& oracle, int x, int y) {
  std::map<int, Rational> dist;
  for (auto seed : oracle.seed_support()) {
    dist[oracle.action(x, seed).apply(y)] += oracle.seed_weight(seed);
  }
  return dist;
}

}  // namespace

TEST_CASE("shift oracle acts by modular addition of sigma(x)") {
  const auto involutions = enumerate_fixed_point_free_involutions(4);
  const auto oracle = make_shift_oracle(involutions, "O_INV");
  CHECK(oracle.control_size() == 4);
  CHECK(oracle.target_size() == 4);
  CHECK(oracle.seeds().size() == 3);
  CHECK_FALSE(oracle.deterministic());

  for (std::int64_t seed = 0; seed < 3; ++seed) {
    const auto& sigma = involutions[static_cast<std::size_t>(seed)];
    for (int x = 1; x <= 4; ++x) {
      for (int y = 1; y <= 4; ++y) {
        const int expected = (index0(y) + sigma.apply(x)) % 4 + 1;
        CHECK(oracle.action(x, seed).apply(y) == expected);
      }
    }
  }

  // Singleton class {identity}: action(x, .) is the deterministic shift by x.
  const auto deterministic = make_shift_oracle({Permutation::identity(4)}, "O_id");
  CHECK(deterministic.deterministic());
  CHECK(deterministic.action(2, 0) == Permutation::cyclic_shift(4, 2));

  CHECK_THROWS_AS(make_shift_oracle({}, "empty"), Error);
}

TEST_CASE("shift amount is uniform over [N] minus x for both classes") {
  for (const auto* family : {"INV", "CYC"}) {
    const auto perms = std::string(family) == "INV" ? enumerate_fixed_point_free_involutions(4)
                                                    : enumerate_full_cycles(4);
    const auto oracle = make_shift_oracle(perms, family);
    for (int x = 1; x <= 4; ++x) {
      std::map<int, Rational> shift_dist;
      for (auto seed : oracle.seed_support()) {
        const auto& sigma = std::get<Permutation>(oracle.seeds().value(seed));
        shift_dist[sigma.apply(x)] += oracle.seed_weight(seed);
      }
      CHECK(shift_dist.count(x) == 0);
      for (int v = 1; v <= 4; ++v) {
        if (v != x) CHECK(shift_dist[v] == Rational(1, 3));
      }
    }
  }
}

TEST_CASE("standard xor oracle") {
  // Deterministic f = 0 acts as the identity for every x.
  const auto zero = make_standard_xor_oracle(4, 2, {{0, 0, 0, 0}}, "zero");
  for (int x = 1; x <= 4; ++x) CHECK(zero.action(x, 0) == Permutation::identity(2));

  // Sixteen deterministic oracles, one per binary function on [4].
  std::set<std::string> labels;
  for (int f = 0; f < 16; ++f) {
    std::vector<int> table;
    for (int x = 0; x < 4; ++x) table.push_back((f >> x) & 1);
    const auto oracle = make_standard_xor_oracle(4, 2, {table}, "f" + std::to_string(f));
    CHECK(oracle.deterministic());
    for (int x = 1; x <= 4; ++x) {
      CHECK(oracle.action(x, 0).apply(1) == (table[static_cast<std::size_t>(x - 1)] ? 2 : 1));
    }
    labels.insert(oracle.name());
  }
  CHECK(labels.size() == 16);

  // XOR needs a power-of-two target unless modular addition is selected.
  CHECK_THROWS_AS(make_standard_xor_oracle(2, 3, {{0, 1}}, "bad"), Error);
  CHECK_NOTHROW(make_standard_xor_oracle(2, 3, {{0, 1}}, "ok", TargetGroup::modular_add));
}

TEST_CASE("balanced-binary oracle matches the two-seed model") {
  const auto problem = balanced_binary_problem();
  CHECK(problem.control_size() == 1);
  CHECK(problem.target_size() == 2);
  CHECK(problem.seeds().size() == 2);

  // Seed r selects which input the hidden balanced function is evaluated at:
  // id flips the target exactly when r = 1, not exactly when r = 0.
  const auto& id = problem.oracle(0);
  const auto& no = problem.oracle(1);
  CHECK(id.action(1, 0) == Permutation::identity(2));
  CHECK(id.action(1, 1) == Permutation({2, 1}));
  CHECK(no.action(1, 0) == Permutation({2, 1}));
  CHECK(no.action(1, 1) == Permutation::identity(2));

  // Explicit seed model: r1 uniform, later seeds pinned to 0.
  const auto joint = problem.joint_seeds(0, 2);
  CHECK(joint.support == std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 0}});
  CHECK(joint.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("simon oracle seed space") {
  // n=2, a=11b: cosets {00,11} and {01,10}; 4*3 injective assignments.
  CHECK(simon_seed_count(2) == 12);
  const auto oracle = make_simon_oracle(2, 3);
  CHECK(oracle.seeds().size() == 12);

  std::set<std::vector<int>> seen;
  for (std::int64_t seed = 0; seed < 12; ++seed) {
    const auto f = std::get<std::vector<int>>(oracle.seeds().value(seed));
    // Defining constraint: f(x) = f(x xor a), values distinct across cosets.
    CHECK(f[0] == f[3]);
    CHECK(f[1] == f[2]);
    CHECK(f[0] != f[1]);
    seen.insert(f);
  }
  CHECK(seen.size() == 12);

  // Marginal of f(x) is uniform on [4] for every x.
  for (int x = 1; x <= 4; ++x) {
    std::map<int, Rational> dist;
    for (std::int64_t seed = 0; seed < 12; ++seed) {
      const auto f = std::get<std::vector<int>>(oracle.seeds().value(seed));
      dist[f[static_cast<std::size_t>(x - 1)]] += oracle.seed_weight(seed);
    }
    for (int v = 0; v < 4; ++v) CHECK(dist[v] == Rational(1, 4));
  }

  CHECK_THROWS_AS(make_simon_oracle(2, 0), Error);
  CHECK_THROWS_AS(make_simon_oracle(2, 4), Error);

  // n=4 is generated on demand: 16*15*...*9 seeds, unranked lazily.
  const auto big = make_simon_oracle(4, 1);
  CHECK(big.seeds().size() == 518918400);
  CHECK_FALSE(big.seeds().is_materialized());
  const auto f = std::get<std::vector<int>>(big.seeds().value(123456789));
  for (int x = 0; x < 16; ++x) {
    CHECK(f[static_cast<std::size_t>(x)] == f[static_cast<std::size_t>(x ^ 1)]);
  }
}

TEST_CASE("hidden-linear-structure oracle") {
  // s = 0: the action is pi independent of x.
  const auto s0 = make_hls_oracle(2, make_field_element(2, 0));
  CHECK(s0.seeds().size() == 24);
  for (std::int64_t seed = 0; seed < 24; ++seed) {
    const auto& pi = std::get<Permutation>(s0.seeds().value(seed));
    for (int x = 1; x <= 4; ++x) CHECK(s0.action(x, seed) == pi);
  }

  // Output distribution over uniform pi is uniform on [4] for any (x, y).
  const auto s2 = make_hls_oracle(2, make_field_element(2, 2));
  for (int x = 1; x <= 4; ++x) {
    for (int y = 1; y <= 4; ++y) {
      const auto dist = outcome_distribution(s2, x, y);
      for (int z = 1; z <= 4; ++z) CHECK(dist.at(z) == Rational(1, 4));
    }
  }

  // q = 2: two classes, seed space S_2.
  const auto q2 = hls_problem(1);
  CHECK(q2.class_labels() == std::vector<std::string>{"s=0", "s=1"});
  CHECK(q2.seeds().size() == 2);

  // n = 3 is generated (8! seeds) with Lehmer unranking.
  const auto big = make_hls_oracle(3, make_field_element(3, 5));
  CHECK(big.seeds().size() == 40320);
  CHECK_FALSE(big.seeds().is_materialized());
  CHECK(std::get<Permutation>(big.seeds().value(0)) == Permutation::identity(8));
  CHECK(unrank_permutation(8, 40319) == Permutation({8, 7, 6, 5, 4, 3, 2, 1}));
}

TEST_CASE("problem invariants") {
  auto problem = inv_cyc_problem(4);
  CHECK(problem.oracle_count() == 2);
  CHECK(problem.seeds().size() == 9);  // unified INV u CYC seed space
  CHECK(problem.class_prior("INV") == Rational(1, 2));
  CHECK(problem.class_labels() == std::vector<std::string>{"INV", "CYC"});

  // Marginals over the union keep each class's support disjoint.
  Rational inv_mass(0);
  for (std::int64_t seed = 0; seed < problem.seeds().size(); ++seed) {
    const Rational w = problem.oracle(0).seed_weight(seed);
    if (w > 0) {
      inv_mass += w;
      CHECK(problem.oracle(1).seed_weight(seed) == 0);
    }
  }
  CHECK(inv_mass == 1);

  // Prior must sum to exactly 1 and stay positive.
  CHECK_THROWS_WITH_AS(
      OracleProblem({make_shift_oracle({Permutation::identity(2)}, "a"),
                     make_shift_oracle({Permutation({2, 1})}, "b"),
                     make_shift_oracle(enumerate_full_cycles(2), "c")},
                    {"x", "y", "z"}, {Rational(1, 3), Rational(1, 3), Rational(1, 4)},
                    SeedModel::iid()),
      doctest::Contains("deficit 1/12"), Error);

  // Reweighted priors keep within-class conditionals.
  const auto reweighted =
      problem.with_class_priors({{"INV", Rational(1, 3)}, {"CYC", Rational(2, 3)}});
  CHECK(reweighted.class_prior("INV") == Rational(1, 3));
  CHECK(reweighted.class_prior("CYC") == Rational(2, 3));
  CHECK_THROWS_AS(problem.with_class_priors({{"INV", Rational(1)}, {"CYC", Rational(0)}}), Error);
}

TEST_CASE("joint seed constructors") {
  auto problem = inv_cyc_problem(4);

  const auto iid = problem.joint_seeds(0, 2);
  CHECK(iid.support.size() == 9);  // 3 involution seeds squared
  for (const auto& w : iid.weights) CHECK(w == Rational(1, 9));

  OracleProblem shared({problem.oracle(0), problem.oracle(1)}, {"INV", "CYC"},
                       {Rational(1, 2), Rational(1, 2)}, SeedModel::shared());
  const auto diag = shared.joint_seeds(1, 3);
  CHECK(diag.support.size() == 6);
  for (const auto& tuple : diag.support) {
    CHECK(tuple[0] == tuple[1]);
    CHECK(tuple[1] == tuple[2]);
  }

  CHECK_THROWS_AS(balanced_binary_problem().joint_seeds(0, 9), Error);  // no table for k=9
}

TEST_CASE("xor lift") {
  // Lift of the identity-action oracle sends z to z xor y.
  const auto identity_problem = OracleProblem(
      {make_standard_xor_oracle(2, 4, {{0, 0}}, "id")}, {"only"}, {Rational(1)}, SeedModel::iid());
  const auto lifted_id = xor_lift(identity_problem);
  CHECK(lifted_id.control_size() == 8);
  CHECK(lifted_id.target_size() == 4);
  for (int x = 1; x <= 2; ++x) {
    for (int y = 1; y <= 4; ++y) {
      const int packed = lift_pack_control(x, y, 4);
      for (int z = 1; z <= 4; ++z) {
        const int expected = value1(index0(z) ^ index0(y));
        CHECK(lifted_id.oracle(0).action(packed, 0).apply(z) == expected);
      }
    }
  }

  // Lifting is injective on oracle behavior: distinct action families give
  // distinct lifted actions.
  const auto problem = inv_cyc_problem(4);
  const auto lifted = xor_lift(problem);
  bool any_difference = false;
  for (std::int64_t seed = 0; seed < lifted.seeds().size(); ++seed) {
    for (int packed = 1; packed <= lifted.control_size(); ++packed) {
      if (lifted.oracle(0).action(packed, seed) != lifted.oracle(1).action(packed, seed)) {
        any_difference = true;
      }
    }
  }
  CHECK(any_difference);

  // Deterministic oracles stay deterministic.
  CHECK(xor_lift(identity_problem).oracle(0).deterministic());
}

TEST_CASE("amplified problem structure") {
  const auto problem = inv_cyc_problem(4);
  const auto amplified = amplify(problem, 1);
  CHECK(amplified.oracle_count() == 2);
  CHECK(amplified.class_labels() == std::vector<std::string>{"INV", "CYC"});
  CHECK(amplified.control_size() == 4);
  CHECK(amplified.target_size() == 4);
  CHECK(amplified.class_prior("INV") == Rational(1, 2));

  // Each class's amplified seed support enumerates (pi in class, seed tuple).
  const auto support = amplified.oracle(0).seed_support();
  CHECK(support.size() == 3);
  for (auto seed : support) {
    const auto& amp = std::get<AmpSeed>(amplified.seeds().value(seed));
    CHECK(amp.oracle_index == 0);
    CHECK(amplified.oracle(0).seed_weight(seed) == Rational(1, 3));
  }

  // One query to the amplified problem has the base k-query transcript law.
  for (const auto& label : problem.class_labels()) {
    for (int x = 1; x <= 4; ++x) {
      for (int y = 1; y <= 4; ++y) {
        CHECK(class_transcript_law(problem, label, {x}, {y}) ==
              class_transcript_law(amplified, label, {x}, {y}));
      }
    }
  }

  const auto k2 = amplify(problem, 2);
  CHECK(k2.control_size() == 16);
  CHECK(k2.target_size() == 16);
  CHECK(k2.oracle(0).seed_support().size() == 9);

  // ell = 2 joint law factors across queries (fresh (pi, r) per query).
  const auto one = full_transcript_law(k2, "INV", 1);
  bool checked = false;
  for (int xa = 1; xa <= 16; xa += 7) {
    for (int ya = 1; ya <= 16; ya += 5) {
      const auto law2 = class_transcript_law(k2, "INV", {xa, xa}, {ya, ya});
      const auto& law1 = one.by_query.at({{xa}, {ya}});
      for (const auto& [z, p] : law2) {
        const auto first = law1.find({z[0]});
        const auto second = law1.find({z[1]});
        REQUIRE(first != law1.end());
        REQUIRE(second != law1.end());
        CHECK(p == first->second * second->second);
        checked = true;
      }
    }
  }
  CHECK(checked);
}

TEST_CASE("repeat batch") {
  const auto problem = inv_cyc_problem(4);

  // T = 1 is the same problem up to tupling.
  const auto t1 = repeat_batch(problem, 1);
  CHECK(t1.control_size() == 4);
  CHECK(t1.target_size() == 4);
  for (const auto& label : problem.class_labels()) {
    for (int x = 1; x <= 4; ++x) {
      for (int y = 1; y <= 4; ++y) {
        CHECK(class_transcript_law(problem, label, {x}, {y}) ==
              class_transcript_law(t1, label, {x}, {y}));
      }
    }
  }

  // T = 2: one query behaves as two independent base queries.
  const auto t2 = repeat_batch(problem, 2);
  CHECK(t2.control_size() == 16);
  CHECK(t2.target_size() == 16);
  for (const auto& label : problem.class_labels()) {
    const int x1 = 1, x2 = 3, y1 = 2, y2 = 4;
    const int packed_x = static_cast<int>(pack_tuple({x1, x2}, 4));
    const int packed_y = static_cast<int>(pack_tuple({y1, y2}, 4));
    const auto batched = class_transcript_law(t2, label, {packed_x}, {packed_y});
    const auto base1 = class_transcript_law(problem, label, {x1}, {y1});
    const auto base2 = class_transcript_law(problem, label, {x2}, {y2});
    Rational total(0);
    for (const auto& [z, p] : batched) {
      const auto parts = unpack_tuple(z[0], 4, 2);
      CHECK(p == base1.at({parts[0]}) * base2.at({parts[1]}));
      total += p;
    }
    CHECK(total == 1);
  }

  // Deterministic oracles stay deterministic under tupling.
  const auto det = OracleProblem({make_shift_oracle({Permutation::identity(4)}, "id")}, {"only"},
                                 {Rational(1)}, SeedModel::iid());
  CHECK(repeat_batch(det, 2).oracle(0).deterministic());

  // The default state cap refuses T = 7; lifting the cap builds it lazily.
  CHECK_THROWS_AS(repeat_batch(problem, 7), Error);
  const auto t7 = repeat_batch(problem, 7, Caps::unlimited());
  CHECK(t7.control_size() == 16384);
  CHECK_FALSE(t7.seeds().is_materialized());
  CHECK(t7.seeds().size() == 4782969);  // 9^7 tuples over the unified space
  // Spot-check one lazy action: slotwise application of the base shifts.
  const auto& tuple = std::get<TupleSeed>(t7.seeds().value(1234567));
  const auto xs = unpack_tuple(777, 4, 7);
  const auto ys = unpack_tuple(4242, 4, 7);
  std::vector<int> expected(7);
  for (int i = 0; i < 7; ++i) {
    expected[static_cast<std::size_t>(i)] =
        problem.oracle(0)
            .action(xs[static_cast<std::size_t>(i)], tuple.parts[static_cast<std::size_t>(i)])
            .apply(ys[static_cast<std::size_t>(i)]);
  }
  CHECK(t7.oracle(0).action(777, 1234567).apply(4242) == pack_tuple(expected, 4));
}

TEST_SUITE_END();
