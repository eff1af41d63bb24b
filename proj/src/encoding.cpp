#include "olab/encoding.hpp"

#include "olab/errors.hpp"
#include "olab/quantum.hpp"
#include "olab/transforms.hpp"

namespace olab {

PureState encode_pure(const RandomizedOracle& oracle, std::int64_t seed_index) {
  const int n = oracle.control_size();
  const int m = oracle.target_size();
  const SeedValue seed = oracle.seeds().value(seed_index);
  std::vector<ExactAmp> amps(static_cast<std::size_t>(n) * m * m);
  for (int x = 1; x <= n; ++x) {
    const Permutation pi = oracle.action_value(x, seed);
    for (int y = 1; y <= m; ++y) {
      const int z = pi.apply(y);
      const auto index =
          (static_cast<std::size_t>(index0(x)) * m + static_cast<std::size_t>(index0(y))) * m +
          static_cast<std::size_t>(index0(z));
      amps[index].re = 1;
    }
  }
  return PureState({n, m, m}, std::move(amps), Rational(static_cast<std::int64_t>(n) * m));
}

PureState encode_pure_tuple(const RandomizedOracle& oracle,
                            const std::vector<std::int64_t>& seed_tuple) {
  if (seed_tuple.empty()) throw_contract("encode_pure_tuple requires at least one slot");
  PureState state = encode_pure(oracle, seed_tuple.front());
  for (std::size_t i = 1; i < seed_tuple.size(); ++i) {
    state = state.tensor(encode_pure(oracle, seed_tuple[i]));
  }
  return state;
}

EncodingState encode_k(const RandomizedOracle& oracle, int k, const SeedDistribution& joint,
                       const Caps& caps) {
  if (joint.k != k) throw_contract("joint seed distribution tuple length differs from k");
  joint.validate();
  const int n = oracle.control_size();
  const int m = oracle.target_size();
  if (!encoding_dim_within(n, m, k, caps.max_state_dim)) {
    throw_cap("encoding dimension (N*M^2)^k exceeds the configured state-size cap");
  }

  std::vector<int> dims;
  for (int slot = 0; slot < k; ++slot) {
    dims.push_back(n);
    dims.push_back(m);
    dims.push_back(m);
  }
  EncodingState result{n, m, k, DensityMatrix(std::move(dims))};
  for (std::size_t i = 0; i < joint.support.size(); ++i) {
    result.state.add_pure(joint.weights[i], encode_pure_tuple(oracle, joint.support[i]));
  }
  return result;
}

HeraldedResult heralded_apply(const PureState& encoding_slot, const PureState& input) {
  const auto& enc_dims = encoding_slot.register_dims();
  const auto& in_dims = input.register_dims();
  if (enc_dims.size() != 3 || enc_dims[1] != enc_dims[2]) {
    throw_contract("heralded_apply: encoding slot must have registers (N, M, M)");
  }
  if (in_dims.size() != 2 || in_dims[0] != enc_dims[0] || in_dims[1] != enc_dims[1]) {
    throw_contract("heralded_apply: input registers must be (N, M)");
  }
  const int n = enc_dims[0];
  const int m = enc_dims[1];

  // A |x,y,z>|x',y'> = delta_{xx'} delta_{yy'} (1/sqrt(M)) |x,z>.
  std::vector<ExactAmp> out(static_cast<std::size_t>(n) * m);
  for (int x = 1; x <= n; ++x) {
    for (int z = 1; z <= m; ++z) {
      ExactAmp sum;
      for (int y = 1; y <= m; ++y) {
        const auto& e = encoding_slot.amplitude(encoding_slot.pack({x, y, z}));
        if (e.is_zero()) continue;
        const auto& c = input.amplitude(input.pack({x, y}));
        if (c.is_zero()) continue;
        sum.re += e.re * c.re - e.im * c.im;
        sum.im += e.re * c.im + e.im * c.re;
      }
      out[static_cast<std::size_t>(index0(x)) * m + static_cast<std::size_t>(index0(z))] = sum;
    }
  }

  const Rational radical = encoding_slot.radical() * input.radical() * m;
  Rational norm(0);
  for (const auto& a : out) norm += a.re * a.re + a.im * a.im;
  HeraldedResult result;
  result.success_probability = norm / radical;
  if (result.success_probability != 0) {
    result.output = PureState({n, m}, std::move(out), radical * result.success_probability);
  }
  return result;
}

EncodingSimReport verify_encoding_simulation(const RandomizedOracle& oracle, int k,
                                             const SeedDistribution& joint,
                                             const std::vector<PureState>& per_query_inputs,
                                             const Caps& caps) {
  if (static_cast<int>(per_query_inputs.size()) != k) {
    throw_contract("verify_encoding_simulation needs one input state per query slot");
  }
  const int n = oracle.control_size();
  const int m = oracle.target_size();
  for (const auto& input : per_query_inputs) {
    if (input.register_dims() != std::vector<int>{n, m} || !input.is_normalized()) {
      throw_contract("per-query inputs must be normalized states on (N, M)");
    }
  }
  joint.validate();
  if (!encoding_dim_within(n, m, k, caps.max_state_dim)) {
    throw_cap("encoding dimension (N*M^2)^k exceeds the configured state-size cap");
  }

  std::vector<int> dims;
  for (int slot = 0; slot < k; ++slot) {
    dims.push_back(n);
    dims.push_back(m);
  }
  DensityMatrix direct(dims);
  DensityMatrix heralded(dims);
  const Rational per_slot_success(1, static_cast<std::int64_t>(n) * m * m);
  const Rational expected_success = rational_pow(per_slot_success, static_cast<unsigned>(k));

  EncodingSimReport report;
  report.success_probability = expected_success;
  for (std::size_t t = 0; t < joint.support.size(); ++t) {
    const auto& tuple = joint.support[t];
    std::optional<PureState> direct_state;
    std::optional<PureState> heralded_state;
    Rational tuple_success(1);
    for (int slot = 0; slot < k; ++slot) {
      const auto seed = tuple[static_cast<std::size_t>(slot)];
      const auto& input = per_query_inputs[static_cast<std::size_t>(slot)];
      PureState direct_slot = apply_oracle_unitary(input, oracle, seed, 0, 1);
      HeraldedResult retrieved = heralded_apply(encode_pure(oracle, seed), input);
      if (!retrieved.output.has_value()) throw_contract("heralded retrieval lost the state");
      tuple_success *= retrieved.success_probability;
      direct_state = direct_state ? direct_state->tensor(direct_slot) : direct_slot;
      heralded_state = heralded_state ? heralded_state->tensor(*retrieved.output)
                                      : *retrieved.output;
    }
    if (tuple_success != expected_success) {
      report.states_equal = false;
      return report;
    }
    direct.add_pure(joint.weights[t], *direct_state);
    heralded.add_pure(joint.weights[t], *heralded_state);
  }
  report.states_equal = direct == heralded;
  return report;
}

}  // namespace olab
