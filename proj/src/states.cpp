#include "olab/states.hpp"

#include "olab/errors.hpp"
#include "olab/permutation.hpp"

namespace olab {

std::int64_t flat_dim(const std::vector<int>& register_dims) {
  std::int64_t d = 1;
  for (int r : register_dims) {
    if (r < 1) throw_contract("register dimensions must be positive");
    d *= r;
  }
  return d;
}

PureState::PureState(std::vector<int> register_dims, std::vector<ExactAmp> amplitudes,
                     Rational radical)
    : dims_(std::move(register_dims)), amps_(std::move(amplitudes)), radical_(std::move(radical)) {
  if (radical_ <= 0) throw_contract("state radical must be positive");
  if (static_cast<std::int64_t>(amps_.size()) != flat_dim(dims_)) {
    throw_contract("amplitude vector length differs from register dimensions");
  }
}

PureState PureState::basis(std::vector<int> register_dims, const std::vector<int>& values_1based) {
  const auto d = flat_dim(register_dims);
  std::vector<ExactAmp> amps(static_cast<std::size_t>(d));
  PureState state(std::move(register_dims), std::move(amps), Rational(1));
  state.amps_[static_cast<std::size_t>(state.pack(values_1based))].re = 1;
  return state;
}

PureState PureState::uniform(std::vector<int> register_dims) {
  const auto d = flat_dim(register_dims);
  std::vector<ExactAmp> amps(static_cast<std::size_t>(d));
  for (auto& a : amps) a.re = 1;
  return PureState(std::move(register_dims), std::move(amps), Rational(d));
}

Rational PureState::norm_squared() const {
  Rational sum(0);
  for (const auto& a : amps_) sum += a.re * a.re + a.im * a.im;
  return sum / radical_;
}

bool PureState::is_real() const {
  for (const auto& a : amps_) {
    if (a.im != 0) return false;
  }
  return true;
}

PureState PureState::tensor(const PureState& other) const {
  std::vector<int> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  std::vector<ExactAmp> amps(amps_.size() * other.amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    for (std::size_t j = 0; j < other.amps_.size(); ++j) {
      const auto& a = amps_[i];
      const auto& b = other.amps_[j];
      amps[i * other.amps_.size() + j] =
          ExactAmp{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
  }
  return PureState(std::move(dims), std::move(amps), radical_ * other.radical_);
}

namespace {

// q1 * sqrt(1/d1) == q2 * sqrt(1/d2), exactly.
bool component_equal(const Rational& q1, const Rational& d1, const Rational& q2,
                     const Rational& d2) {
  if ((q1 > 0) != (q2 > 0) || (q1 < 0) != (q2 < 0)) return false;
  return q1 * q1 * d2 == q2 * q2 * d1;
}

}  // namespace

bool PureState::same_state(const PureState& other) const {
  if (dims_ != other.dims_) return false;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (!component_equal(amps_[i].re, radical_, other.amps_[i].re, other.radical_)) return false;
    if (!component_equal(amps_[i].im, radical_, other.amps_[i].im, other.radical_)) return false;
  }
  return true;
}

Rational PureState::basis_probability(std::int64_t index) const {
  const auto& a = amps_.at(static_cast<std::size_t>(index));
  return (a.re * a.re + a.im * a.im) / radical_;
}

std::int64_t PureState::pack(const std::vector<int>& values_1based) const {
  if (values_1based.size() != dims_.size()) {
    throw_contract("basis value tuple length differs from register count");
  }
  std::int64_t index = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    const int v = values_1based[i];
    if (v < 1 || v > dims_[i]) throw_contract("basis value outside register dimension");
    index = index * dims_[i] + index0(v);
  }
  return index;
}

std::vector<int> PureState::unpack(std::int64_t index) const {
  std::vector<int> values(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    values[i] = value1(static_cast<int>(index % dims_[i]));
    index /= dims_[i];
  }
  return values;
}

DensityMatrix::DensityMatrix(std::vector<int> register_dims)
    : dims_(std::move(register_dims)), matrix_(flat_dim(dims_)) {}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix rho(psi.register_dims());
  rho.add_pure(Rational(1), psi);
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<int> register_dims) {
  DensityMatrix rho(std::move(register_dims));
  const auto d = rho.dim();
  for (std::int64_t i = 0; i < d; ++i) rho.matrix_.set(i, i, Rational(1, d));
  return rho;
}

void DensityMatrix::add_pure(const Rational& weight, const PureState& psi) {
  if (psi.register_dims() != dims_) {
    throw_contract("density matrix and pure state register dimensions differ");
  }
  if (!psi.is_real()) {
    throw_contract("exact density matrices require real-amplitude pure states");
  }
  if (weight < 0) throw_contract("mixture weights must be nonnegative");
  if (weight == 0) return;
  const Rational scale = weight / psi.radical();
  std::vector<std::pair<std::int64_t, const Rational*>> nonzero;
  for (std::int64_t i = 0; i < psi.dim(); ++i) {
    const auto& a = psi.amplitude(i);
    if (a.re != 0) nonzero.emplace_back(i, &a.re);
  }
  for (const auto& [r, qr] : nonzero) {
    for (const auto& [c, qc] : nonzero) {
      matrix_.add(r, c, *qr * *qc * scale);
    }
  }
}

DensityMatrix DensityMatrix::partial_trace_keep(const std::vector<int>& keep_registers) const {
  std::vector<bool> keep(dims_.size(), false);
  std::vector<int> kept_dims;
  for (int reg : keep_registers) {
    if (reg < 0 || reg >= static_cast<int>(dims_.size())) {
      throw_contract("partial trace register index out of range");
    }
    if (keep[static_cast<std::size_t>(reg)]) throw_contract("duplicate register in partial trace");
    keep[static_cast<std::size_t>(reg)] = true;
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (keep[i]) kept_dims.push_back(dims_[i]);
  }
  DensityMatrix out(kept_dims);

  auto split = [&](std::int64_t flat) {
    std::vector<int> values(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      values[i] = static_cast<int>(flat % dims_[i]);
      flat /= dims_[i];
    }
    std::int64_t kept = 0, traced = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (keep[i]) {
        kept = kept * dims_[i] + values[i];
      } else {
        traced = traced * dims_[i] + values[i];
      }
    }
    return std::pair<std::int64_t, std::int64_t>{kept, traced};
  };

  for (const auto& [key, value] : matrix_.entries()) {
    const auto [row_keep, row_trace] = split(key.first);
    const auto [col_keep, col_trace] = split(key.second);
    if (row_trace == col_trace) out.matrix_.add(row_keep, col_keep, value);
  }
  return out;
}

void Povm::validate() const {
  if (effects.empty()) throw_contract("POVM requires at least one effect");
  if (labels.size() != effects.size()) throw_contract("POVM labels/effects size mismatch");
  const auto dim = effects.front().dim();
  SparseRationalMatrix sum(dim);
  for (const auto& effect : effects) {
    if (effect.dim() != dim) throw_contract("POVM effects must share one dimension");
    if (!is_positive_semidefinite(effect)) {
      throw_contract("POVM effect is not positive semidefinite");
    }
    sum.add_scaled(effect, Rational(1));
  }
  if (sum != SparseRationalMatrix::identity(dim)) {
    throw_contract("POVM effects do not sum to the identity");
  }
}

Povm Povm::computational_basis(std::int64_t dim) {
  Povm povm;
  for (std::int64_t i = 0; i < dim; ++i) {
    SparseRationalMatrix effect(dim);
    effect.set(i, i, Rational(1));
    povm.effects.push_back(std::move(effect));
    povm.labels.push_back("basis:" + std::to_string(i + 1));
  }
  return povm;
}

Povm Povm::swap_projectors(int register_size) {
  const std::int64_t d = static_cast<std::int64_t>(register_size) * register_size;
  SparseRationalMatrix sym(d), anti(d);
  const Rational half(1, 2);
  for (int a = 0; a < register_size; ++a) {
    for (int b = 0; b < register_size; ++b) {
      const std::int64_t row = static_cast<std::int64_t>(a) * register_size + b;
      const std::int64_t swapped = static_cast<std::int64_t>(b) * register_size + a;
      sym.add(row, row, half);
      sym.add(row, swapped, half);
      anti.add(row, row, half);
      anti.add(row, swapped, -half);
    }
  }
  Povm povm;
  povm.effects = {std::move(sym), std::move(anti)};
  povm.labels = {"symmetric", "antisymmetric"};
  return povm;
}

}  // namespace olab
