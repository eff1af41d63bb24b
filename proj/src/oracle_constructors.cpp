#include "olab/oracle_constructors.hpp"

#include <algorithm>
#include <numeric>

#include "olab/errors.hpp"

namespace olab {

namespace {

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

Permutation xor_target_permutation(int target_size, int mask, TargetGroup group) {
  std::vector<int> images(static_cast<std::size_t>(target_size));
  for (int y = 1; y <= target_size; ++y) {
    const int offset = group == TargetGroup::bitwise_xor ? (index0(y) ^ mask)
                                                         : (index0(y) + mask) % target_size;
    images[static_cast<std::size_t>(index0(y))] = value1(offset);
  }
  return Permutation(std::move(images));
}

}  // namespace

RandomizedOracle make_shift_oracle(const std::vector<Permutation>& perm_class,
                                   const std::string& name) {
  if (perm_class.empty()) throw_contract("make_shift_oracle requires a nonempty class");
  const int n = perm_class.front().degree();
  std::vector<SeedValue> seeds;
  seeds.reserve(perm_class.size());
  for (const auto& p : perm_class) {
    if (p.degree() != n) throw_contract("make_shift_oracle: mixed permutation degrees");
    seeds.emplace_back(p);
  }
  auto space = SeedSpace::materialized(std::move(seeds));
  std::vector<Rational> weights(perm_class.size(),
                                Rational(1, static_cast<std::int64_t>(perm_class.size())));
  auto action = [n](int x, const SeedValue& seed) {
    const auto& sigma = std::get<Permutation>(seed);
    return Permutation::cyclic_shift(n, sigma.apply(x));
  };
  return RandomizedOracle(name, n, n, std::move(space), Marginal::weights(std::move(weights)),
                          std::move(action));
}

RandomizedOracle make_standard_xor_oracle(int control_size, int target_size,
                                          const std::vector<std::vector<int>>& functions,
                                          const std::string& name, TargetGroup group) {
  if (functions.empty()) throw_contract("make_standard_xor_oracle requires at least one function");
  if (group == TargetGroup::bitwise_xor && !is_power_of_two(target_size)) {
    throw_config("XOR action requires a power-of-two target size, got M=" +
                 std::to_string(target_size) + " (select modular addition instead)");
  }
  // Seeds are abstract indices r shared across a problem's oracles; each
  // oracle interprets r through its own function list, f(x, r).
  std::vector<SeedValue> seeds;
  seeds.reserve(functions.size());
  for (std::size_t r = 0; r < functions.size(); ++r) {
    const auto& f = functions[r];
    if (static_cast<int>(f.size()) != control_size) {
      throw_contract("function table length differs from N");
    }
    for (int v : f) {
      if (v < 0 || v >= target_size) throw_contract("function value outside [0, M)");
    }
    seeds.emplace_back(OpaqueSeed{"r=" + std::to_string(r)});
  }
  auto space = SeedSpace::materialized(std::move(seeds));
  std::vector<Rational> weights(functions.size(),
                                Rational(1, static_cast<std::int64_t>(functions.size())));
  auto action = [target_size, group, functions](int x, const SeedValue& seed) {
    const auto& label = std::get<OpaqueSeed>(seed).label;
    const auto r = static_cast<std::size_t>(std::stoll(label.substr(2)));
    if (label.substr(0, 2) != "r=" || r >= functions.size()) {
      throw_contract("seed '" + label + "' outside this oracle's function list");
    }
    return xor_target_permutation(target_size, functions[r].at(static_cast<std::size_t>(index0(x))),
                                  group);
  };
  return RandomizedOracle(name, control_size, target_size, std::move(space),
                          Marginal::weights(std::move(weights)), std::move(action));
}

std::int64_t simon_seed_count(int n) {
  const std::int64_t q = 1ll << n;
  const std::int64_t cosets = q / 2;
  std::int64_t count = 1;
  for (std::int64_t i = 0; i < cosets; ++i) count *= (q - i);
  return count;
}

std::vector<int> simon_seed_function(int n, std::uint32_t a, std::int64_t seed_index) {
  const std::uint32_t q = 1u << n;
  if (a == 0 || a >= q) throw_contract("Simon oracle requires a nonzero hidden vector in Z_2^n");
  // Coset representatives of {x, x + a} in increasing order.
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < q; ++x) {
    if (x < (x ^ a)) reps.push_back(x);
  }
  // Mixed-radix unranking of an injective assignment of values to cosets.
  std::vector<int> available(q);
  std::iota(available.begin(), available.end(), 0);
  std::vector<int> f(q, 0);
  std::int64_t rest = seed_index;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::int64_t radix = static_cast<std::int64_t>(available.size());
    const auto choice = static_cast<std::size_t>(rest % radix);
    rest /= radix;
    const int v = available[choice];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(choice));
    f[reps[i]] = v;
    f[reps[i] ^ a] = v;
  }
  if (rest != 0) throw_contract("Simon seed index out of range");
  return f;
}

RandomizedOracle make_simon_oracle(int n, std::uint32_t a, const Caps& caps) {
  if (n < 1 || n > 4) throw_contract("make_simon_oracle supports n in 1..4");
  const std::uint32_t q = 1u << n;
  if (a == 0 || a >= q) throw_contract("Simon oracle requires a nonzero hidden vector in Z_2^n");
  const int size = static_cast<int>(q);
  const auto count = simon_seed_count(n);
  const std::string name = "simon:n=" + std::to_string(n) + ";a=" + std::to_string(a);

  auto action = [size](int x, const SeedValue& seed) {
    const auto& f = std::get<std::vector<int>>(seed);
    return xor_target_permutation(size, f.at(static_cast<std::size_t>(index0(x))),
                                  TargetGroup::bitwise_xor);
  };

  if (n <= 3) {
    std::vector<SeedValue> seeds;
    seeds.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) seeds.emplace_back(simon_seed_function(n, a, i));
    auto space = SeedSpace::materialized(std::move(seeds));
    std::vector<Rational> weights(static_cast<std::size_t>(count), Rational(1, count));
    return RandomizedOracle(name, size, size, std::move(space),
                            Marginal::weights(std::move(weights)), std::move(action));
  }
  (void)caps;
  auto space = SeedSpace::generated(
      count, [n, a](std::int64_t i) { return SeedValue(simon_seed_function(n, a, i)); });
  return RandomizedOracle(name, size, size, std::move(space), Marginal::uniform(),
                          std::move(action));
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation unrank_permutation(int degree, std::int64_t rank) {
  // Lehmer-code unranking in lexicographic order.
  std::vector<int> available(static_cast<std::size_t>(degree));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(degree));
  std::int64_t rest = rank;
  for (int i = degree; i >= 1; --i) {
    const std::int64_t block = factorial(i - 1);
    const auto choice = static_cast<std::size_t>(rest / block);
    rest %= block;
    if (choice >= available.size()) throw_contract("permutation rank out of range");
    images.push_back(available[choice]);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(choice));
  }
  return Permutation(std::move(images));
}

RandomizedOracle make_hls_oracle(int n, FieldElement s, const Caps& caps) {
  if (n < 1 || n > 4) throw_contract("make_hls_oracle supports n in 1..4");
  if (s.n != n) throw_contract("make_hls_oracle: hidden element has wrong field degree");
  const int q = static_cast<int>(gf2n_order(n));
  const std::string name = "hls:n=" + std::to_string(n) + ";s=" + std::to_string(s.bits);

  auto action = [n, s](int x, const SeedValue& seed) {
    const auto& pi = std::get<Permutation>(seed);
    const FieldElement sx = gf_mul(s, make_field_element(n, static_cast<std::uint32_t>(index0(x))));
    std::vector<int> images(pi.images().size());
    for (int y = 1; y <= pi.degree(); ++y) {
      const FieldElement u = gf_add(make_field_element(n, static_cast<std::uint32_t>(index0(y))), sx);
      images[static_cast<std::size_t>(index0(y))] = pi.apply(value1(static_cast<int>(u.bits)));
    }
    return Permutation(std::move(images));
  };

  if (n <= 2) {
    auto perms = enumerate_all_permutations(q, caps);
    std::vector<SeedValue> seeds(perms.begin(), perms.end());
    auto space = SeedSpace::materialized(std::move(seeds));
    std::vector<Rational> weights(perms.size(),
                                  Rational(1, static_cast<std::int64_t>(perms.size())));
    return RandomizedOracle(name, q, q, std::move(space), Marginal::weights(std::move(weights)),
                            std::move(action));
  }
  auto space = SeedSpace::generated(
      factorial(q), [q](std::int64_t i) { return SeedValue(unrank_permutation(q, i)); });
  return RandomizedOracle(name, q, q, std::move(space), Marginal::uniform(), std::move(action));
}

}  // namespace olab
