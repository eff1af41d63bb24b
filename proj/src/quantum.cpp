#include "olab/quantum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "olab/errors.hpp"

namespace olab {

PureState apply_oracle_unitary(const PureState& state, const RandomizedOracle& oracle,
                               std::int64_t seed_index, int control_register,
                               int target_register) {
  const auto& dims = state.register_dims();
  if (control_register < 0 || control_register >= static_cast<int>(dims.size()) ||
      target_register < 0 || target_register >= static_cast<int>(dims.size()) ||
      control_register == target_register) {
    throw_contract("apply_oracle_unitary: bad register selection");
  }
  if (dims[static_cast<std::size_t>(control_register)] != oracle.control_size() ||
      dims[static_cast<std::size_t>(target_register)] != oracle.target_size()) {
    throw_contract("apply_oracle_unitary: register dimensions do not match the oracle");
  }

  const SeedValue seed = oracle.seeds().value(seed_index);
  std::vector<Permutation> by_control(static_cast<std::size_t>(oracle.control_size()));
  for (int x = 1; x <= oracle.control_size(); ++x) {
    by_control[static_cast<std::size_t>(index0(x))] = oracle.action_value(x, seed);
  }

  std::vector<ExactAmp> amps(static_cast<std::size_t>(state.dim()));
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    const auto& a = state.amplitude(i);
    if (a.is_zero()) continue;
    auto values = state.unpack(i);
    const int x = values[static_cast<std::size_t>(control_register)];
    const int y = values[static_cast<std::size_t>(target_register)];
    values[static_cast<std::size_t>(target_register)] =
        by_control[static_cast<std::size_t>(index0(x))].apply(y);
    amps[static_cast<std::size_t>(state.pack(values))] = a;
  }
  return PureState(dims, std::move(amps), state.radical());
}

namespace {

void check_two_equal_registers(const std::vector<int>& dims) {
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw_contract("swap test requires exactly two equal-dimension registers");
  }
}

}  // namespace

Rational swap_test_probability(const DensityMatrix& rho) {
  check_two_equal_registers(rho.register_dims());
  const std::int64_t d = rho.register_dims()[0];
  Rational trace_f(0);
  for (const auto& [key, value] : rho.matrix().entries()) {
    // tr(rho F) = sum_{a,b} rho[(a,b),(b,a)]
    const std::int64_t a = key.first / d;
    const std::int64_t b = key.first % d;
    if (key.second == b * d + a) trace_f += value;
  }
  return (Rational(1) + trace_f) / 2;
}

Rational swap_test_probability(const PureState& psi) {
  check_two_equal_registers(psi.register_dims());
  const std::int64_t d = psi.register_dims()[0];
  // <psi|F|psi> = sum_{a,b} conj(q_{ab}) q_{ba} / D; real for any state since
  // the terms pair up conjugately.
  Rational trace_f(0);
  for (std::int64_t a = 0; a < d; ++a) {
    for (std::int64_t b = 0; b < d; ++b) {
      const auto& u = psi.amplitude(a * d + b);
      const auto& v = psi.amplitude(b * d + a);
      trace_f += u.re * v.re + u.im * v.im;
    }
  }
  return (Rational(1) + trace_f / psi.radical()) / 2;
}

std::vector<Rational> measure(const Povm& povm, const DensityMatrix& rho) {
  povm.validate();
  if (povm.effects.front().dim() != rho.dim()) {
    throw_contract("measure: POVM and state dimensions differ");
  }
  std::vector<Rational> probabilities;
  probabilities.reserve(povm.effects.size());
  Rational total(0);
  for (const auto& effect : povm.effects) {
    Rational p(0);
    for (const auto& [key, value] : effect.entries()) {
      const auto& rho_entry = rho.matrix().at(key.second, key.first);
      if (rho_entry != 0) p += value * rho_entry;
    }
    probabilities.push_back(p);
    total += p;
  }
  if (total != rho.trace()) {
    throw_contract("measurement probabilities do not sum to the state trace");
  }
  return probabilities;
}

double helstrom_advantage(const DensityMatrix& sigma0, const DensityMatrix& sigma1,
                          const Rational& p0, const Rational& p1) {
  if (sigma0.dim() != sigma1.dim()) throw_contract("helstrom_advantage: dimension mismatch");
  if (p0 + p1 != 1 || p0 < 0 || p1 < 0) {
    throw_contract("helstrom_advantage: priors must be nonnegative and sum to 1");
  }
  const auto d = sigma0.dim();
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(d, d);
  for (const auto& [key, value] : sigma0.matrix().entries()) {
    delta(key.first, key.second) += to_double(value * p0);
  }
  for (const auto& [key, value] : sigma1.matrix().entries()) {
    delta(key.first, key.second) -= to_double(value * p1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta, Eigen::EigenvaluesOnly);
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  const double advantage = 0.5 + 0.5 * trace_norm - std::max(to_double(p0), to_double(p1));
  return std::max(0.0, advantage);
}

namespace {

// Algorithm state before the swap test: uniform control against the shift
// unit (target value M maps to the plain shift amount).
PureState inv_cyc_query_state(const RandomizedOracle& oracle, std::int64_t seed_index) {
  const int n = oracle.control_size();
  PureState uniform_control = PureState::uniform({n}).tensor(PureState::basis({n}, {n}));
  return apply_oracle_unitary(uniform_control, oracle, seed_index, 0, 1);
}

std::int64_t sample_index(const std::vector<double>& cumulative, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min<std::int64_t>(static_cast<std::int64_t>(it - cumulative.begin()),
                                static_cast<std::int64_t>(cumulative.size()) - 1);
}

}  // namespace

InvCycReport run_inv_cyc_algorithm(const RandomizedOracle& shift_oracle) {
  if (shift_oracle.control_size() != shift_oracle.target_size()) {
    throw_contract("the swap-test distinguisher requires a shift oracle with M = N");
  }
  InvCycReport report;
  bool antisymmetric_possible = false;
  for (auto seed : shift_oracle.seed_support()) {
    const Rational p = swap_test_probability(inv_cyc_query_state(shift_oracle, seed));
    report.exact_p_symmetric += shift_oracle.seed_weight(seed) * p;
    if (p != 1) antisymmetric_possible = true;
  }
  report.classification = antisymmetric_possible ? "CYC" : "INV";
  return report;
}

InvCycReport run_inv_cyc_algorithm_sampled(const RandomizedOracle& shift_oracle, int trials,
                                           std::uint64_t rng_seed) {
  if (trials < 1) throw_contract("sampled mode requires trials >= 1");
  InvCycReport report = run_inv_cyc_algorithm(shift_oracle);

  const auto support = shift_oracle.seed_support();
  std::vector<double> cumulative;
  std::vector<double> p_symmetric;
  double acc = 0.0;
  for (auto seed : support) {
    acc += to_double(shift_oracle.seed_weight(seed));
    cumulative.push_back(acc);
    p_symmetric.push_back(
        to_double(swap_test_probability(inv_cyc_query_state(shift_oracle, seed))));
  }

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int symmetric_count = 0;
  for (int t = 0; t < trials; ++t) {
    const auto pick = static_cast<std::size_t>(sample_index(cumulative, rng));
    if (unit(rng) < p_symmetric[pick]) ++symmetric_count;
  }
  report.empirical_p_symmetric = static_cast<double>(symmetric_count) / trials;
  report.trials = trials;
  report.classification = symmetric_count == trials ? "INV" : "CYC";
  return report;
}

std::map<std::uint32_t, Rational> simon_query_distribution(int n, const std::vector<int>& f) {
  const int q = 1 << n;
  if (static_cast<int>(f.size()) != q) {
    throw_contract("simon_query_distribution: function table length differs from 2^n");
  }
  // |+>^n |0>, oracle, Hadamard layer on the control.
  std::vector<ExactAmp> amps(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int x = 0; x < q; ++x) {
    const int w = f[static_cast<std::size_t>(x)];
    if (w < 0 || w >= q) throw_contract("simon seed value outside range");
    amps[static_cast<std::size_t>(x) * q + static_cast<std::size_t>(w)].re = 1;
  }
  std::vector<ExactAmp> transformed(amps.size());
  for (int v = 0; v < q; ++v) {
    for (int w = 0; w < q; ++w) {
      Rational sum(0);
      for (int x = 0; x < q; ++x) {
        const auto& a = amps[static_cast<std::size_t>(x) * q + static_cast<std::size_t>(w)];
        if (a.re == 0) continue;
        const int sign = std::popcount(static_cast<unsigned>(v & x)) % 2 == 0 ? 1 : -1;
        sum += sign * a.re;
      }
      transformed[static_cast<std::size_t>(v) * q + static_cast<std::size_t>(w)].re = sum;
    }
  }
  PureState state({q, q}, std::move(transformed), Rational(q) * Rational(q) * Rational(q));
  std::map<std::uint32_t, Rational> distribution;
  for (int v = 0; v < q; ++v) {
    Rational p(0);
    for (int w = 0; w < q; ++w) {
      p += state.basis_probability(static_cast<std::int64_t>(v) * q + w);
    }
    if (p != 0) distribution[static_cast<std::uint32_t>(v)] = p;
  }
  return distribution;
}

SimonSolveResult simon_solve(const RandomizedOracle& simon_oracle, std::uint64_t rng_seed) {
  const int q = simon_oracle.control_size();
  if (q < 2 || (q & (q - 1)) != 0 || simon_oracle.target_size() != q) {
    throw_contract("simon_solve requires a hidden-shift oracle on [2^n]");
  }
  int n = 0;
  while ((1 << n) < q) ++n;

  const int cap = 50 * n;
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::int64_t> uniform_seed(0, simon_oracle.seeds().size() - 1);

  const bool lazy = !simon_oracle.seeds().is_materialized();
  std::vector<std::int64_t> support;
  std::vector<double> cumulative;
  if (!lazy) {
    support = simon_oracle.seed_support();
    double acc = 0.0;
    for (auto seed : support) {
      acc += to_double(simon_oracle.seed_weight(seed));
      cumulative.push_back(acc);
    }
  }

  std::map<std::int64_t, std::map<std::uint32_t, Rational>> distribution_cache;
  std::vector<std::uint32_t> basis;  // row-reduced, nonzero

  SimonSolveResult result;
  while (result.queries_used < cap) {
    const std::int64_t seed =
        lazy ? uniform_seed(rng) : support[static_cast<std::size_t>(sample_index(cumulative, rng))];
    auto it = distribution_cache.find(seed);
    if (it == distribution_cache.end()) {
      const auto& f = std::get<std::vector<int>>(simon_oracle.seeds().value(seed));
      it = distribution_cache.emplace(seed, simon_query_distribution(n, f)).first;
    }
    ++result.queries_used;

    const double u = unit(rng);
    double acc = 0.0;
    std::uint32_t v = 0;
    for (const auto& [vec, p] : it->second) {
      acc += to_double(p);
      v = vec;
      if (u < acc) break;
    }

    // GF(2) row reduction.
    for (auto row : basis) {
      const std::uint32_t lead = row & (~row + 1u);
      if (v & lead) v ^= row;
    }
    if (v != 0) basis.push_back(v);

    if (static_cast<int>(basis.size()) == n - 1) {
      for (std::uint32_t a = 1; a < static_cast<std::uint32_t>(q); ++a) {
        bool orthogonal = true;
        for (auto row : basis) {
          if (std::popcount(row & a) % 2 != 0) {
            orthogonal = false;
            break;
          }
        }
        if (orthogonal) {
          result.recovered = a;
          return result;
        }
      }
      throw_contract("no hidden vector orthogonal to the measured span");
    }
  }
  return result;  // cap exceeded, recovery failed
}

}  // namespace olab
