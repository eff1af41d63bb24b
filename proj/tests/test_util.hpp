#pragma once

// Shared brute-force reference computations for the test suites. Everything
// here recomputes expected values independently of the library paths it
// checks (filters over S_M, schoolbook polynomial arithmetic, rational
// Gaussian elimination), so frozen constants in the tests stay auditable.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "olab/oracle.hpp"
#include "olab/permutation.hpp"
#include "olab/rational.hpp"
#include "olab/sparse_matrix.hpp"
#include "olab/states.hpp"

namespace olab::testutil {

// All permutations of [m] as image vectors, via std::next_permutation.
inline std::vector<std::vector<int>> brute_permutations(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline bool brute_is_fpf_involution(const std::vector<int>& images) {
  const int m = static_cast<int>(images.size());
  for (int x = 1; x <= m; ++x) {
    const int y = images[static_cast<std::size_t>(x - 1)];
    if (y == x) return false;
    if (images[static_cast<std::size_t>(y - 1)] != x) return false;
  }
  return true;
}

inline bool brute_is_full_cycle(const std::vector<int>& images) {
  const int m = static_cast<int>(images.size());
  int x = 1;
  int steps = 0;
  do {
    x = images[static_cast<std::size_t>(x - 1)];
    ++steps;
  } while (x != 1 && steps <= m);
  return steps == m;
}

// Ordered pairs (x, y) with p(x) = y and p(y) = x, counted literally.
inline int brute_pair_fixing_count(const std::vector<int>& images) {
  const int m = static_cast<int>(images.size());
  int count = 0;
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (images[static_cast<std::size_t>(x - 1)] == y &&
          images[static_cast<std::size_t>(y - 1)] == x) {
        ++count;
      }
    }
  }
  return count;
}

// Schoolbook carry-less multiplication followed by reduction mod the given
// polynomial bit pattern; independent of the library's shift-and-reduce.
inline std::uint32_t brute_gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus,
                                   int degree) {
  std::uint64_t product = 0;
  for (int i = 0; i < 32; ++i) {
    if (b & (1u << i)) product ^= static_cast<std::uint64_t>(a) << i;
  }
  for (int bit = 62; bit >= degree; --bit) {
    if (product & (1ull << bit)) {
      product ^= static_cast<std::uint64_t>(modulus) << (bit - degree);
    }
  }
  return static_cast<std::uint32_t>(product);
}

// Rank of an exact rational matrix by Gaussian elimination.
inline int rational_rank(const SparseRationalMatrix& m) {
  const auto n = m.dim();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (const auto& [key, value] : m.entries()) {
    a[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)] = value;
  }
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < static_cast<std::size_t>(n) && row < static_cast<std::size_t>(n);
       ++col) {
    std::size_t pivot = row;
    while (pivot < static_cast<std::size_t>(n) && a[pivot][col] == 0) ++pivot;
    if (pivot == static_cast<std::size_t>(n)) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      if (i != row && a[i][col] != 0) {
        const Rational factor = a[i][col] / a[row][col];
        for (std::size_t j = col; j < static_cast<std::size_t>(n); ++j) {
          a[i][j] -= factor * a[row][j];
        }
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Deterministic random problems at desk scale: N, M <= 3, up to three seeds,
// two or three classes over two to four oracles.
inline OracleProblem random_small_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(2, 3);
  std::uniform_int_distribution<int> oracle_dist(2, 4);
  std::uniform_int_distribution<int> seed_dist(1, 3);
  std::uniform_int_distribution<int> weight_dist(1, 4);

  const int n = size_dist(rng);
  const int m = size_dist(rng);
  const int oracle_count = oracle_dist(rng);
  const int seed_count = seed_dist(rng);
  const int class_count = std::min(oracle_count, size_dist(rng));

  std::vector<SeedValue> seed_values;
  for (int s = 0; s < seed_count; ++s) {
    seed_values.emplace_back(OpaqueSeed{"s" + std::to_string(s)});
  }
  auto space = SeedSpace::materialized(std::move(seed_values));

  std::vector<RandomizedOracle> oracles;
  std::vector<std::string> classes;
  std::vector<Rational> prior;
  std::vector<Rational> raw_prior;
  Rational prior_total(0);
  for (int o = 0; o < oracle_count; ++o) {
    // Random total action table and a random positive-ish marginal.
    std::vector<std::vector<std::vector<int>>> table(static_cast<std::size_t>(seed_count));
    for (int s = 0; s < seed_count; ++s) {
      for (int x = 0; x < n; ++x) {
        auto perms = brute_permutations(m);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        table[static_cast<std::size_t>(s)].push_back(perms[pick(rng)]);
      }
    }
    std::vector<Rational> weights;
    Rational total(0);
    for (int s = 0; s < seed_count; ++s) {
      weights.emplace_back(weight_dist(rng));
      total += weights.back();
    }
    for (auto& w : weights) w /= total;

    auto action = [table](int x, const SeedValue& seed) {
      const auto& label = std::get<OpaqueSeed>(seed).label;
      const auto s = static_cast<std::size_t>(std::stoll(label.substr(1)));
      return Permutation(table.at(s).at(static_cast<std::size_t>(x - 1)));
    };
    oracles.emplace_back("o" + std::to_string(o), n, m, space,
                         Marginal::weights(std::move(weights)), std::move(action));
    classes.push_back("c" + std::to_string(o % class_count));
    raw_prior.emplace_back(weight_dist(rng));
    prior_total += raw_prior.back();
  }
  for (auto& p : raw_prior) prior.push_back(p / prior_total);

  const SeedModel model = rng() % 2 == 0 ? SeedModel::iid() : SeedModel::shared();
  return OracleProblem(std::move(oracles), std::move(classes), std::move(prior), model);
}

// Random real unit vector on (N, M) with exact normalization: integer
// amplitudes with the radical set to their square sum.
inline PureState random_input_state(int n, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> amp_dist(-3, 3);
  std::vector<ExactAmp> amps(static_cast<std::size_t>(n) * m);
  Rational norm(0);
  while (norm == 0) {
    for (auto& a : amps) {
      a.re = amp_dist(rng);
      norm += a.re * a.re;
    }
  }
  return PureState({n, m}, std::move(amps), norm);
}

}  // namespace olab::testutil
