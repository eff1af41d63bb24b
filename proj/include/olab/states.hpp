#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olab/rational.hpp"
#include "olab/sparse_matrix.hpp"

namespace olab {

// Exact amplitude component: the stored value is (re + i*im) * sqrt(1/D)
// with a per-state common radical D. Every state in this laboratory
// (uniform superpositions, permutation images, Hadamard layers) fits this
// form, so norms and outer products stay rational.
struct ExactAmp {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const ExactAmp&) const = default;
};

class PureState {
 public:
  PureState(std::vector<int> register_dims, std::vector<ExactAmp> amplitudes, Rational radical);

  static PureState basis(std::vector<int> register_dims, const std::vector<int>& values_1based);
  static PureState uniform(std::vector<int> register_dims);

  const std::vector<int>& register_dims() const { return dims_; }
  std::int64_t dim() const { return static_cast<std::int64_t>(amps_.size()); }
  const ExactAmp& amplitude(std::int64_t index) const { return amps_.at(static_cast<std::size_t>(index)); }
  const std::vector<ExactAmp>& amplitudes() const { return amps_; }
  const Rational& radical() const { return radical_; }

  Rational norm_squared() const;
  bool is_normalized() const { return norm_squared() == 1; }
  bool is_real() const;

  PureState tensor(const PureState& other) const;

  // Exact equality as complex vectors (radicals reconciled componentwise).
  bool same_state(const PureState& other) const;

  // |amplitude|^2 / D of one basis component.
  Rational basis_probability(std::int64_t index) const;

  std::int64_t pack(const std::vector<int>& values_1based) const;
  std::vector<int> unpack(std::int64_t index) const;

 private:
  std::vector<int> dims_;
  std::vector<ExactAmp> amps_;
  Rational radical_;  // D > 0
};

// Exact density matrix over labelled registers, built as a convex mixture of
// outer products of real-amplitude pure states (which keeps it PSD by
// construction). Entries are exact rationals.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::vector<int> register_dims);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::vector<int> register_dims);

  void add_pure(const Rational& weight, const PureState& psi);

  const std::vector<int>& register_dims() const { return dims_; }
  std::int64_t dim() const { return matrix_.dim(); }
  const SparseRationalMatrix& matrix() const { return matrix_; }
  Rational trace() const { return matrix_.trace(); }

  // Traces out every register not listed; kept registers stay in order.
  DensityMatrix partial_trace_keep(const std::vector<int>& keep_registers) const;

  bool operator==(const DensityMatrix&) const = default;

 private:
  std::vector<int> dims_;
  SparseRationalMatrix matrix_;
};

// Finite POVM with exact rational effects.
struct Povm {
  std::vector<SparseRationalMatrix> effects;
  std::vector<std::string> labels;

  // Each effect PSD, all effects summing to the identity.
  void validate() const;

  static Povm computational_basis(std::int64_t dim);
  // {(I+F)/2, (I-F)/2} on two equal registers of the given size.
  static Povm swap_projectors(int register_size);
};

std::int64_t flat_dim(const std::vector<int>& register_dims);

}  // namespace olab
