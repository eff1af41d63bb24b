#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "olab/rational.hpp"

namespace olab {

// Square sparse matrix with exact rational entries. Zero entries are never
// stored, so equality of two matrices is equality of canonical entry sets;
// iteration over entries() is row-major.
class SparseRationalMatrix {
 public:
  using Index = std::int64_t;
  using Key = std::pair<Index, Index>;

  SparseRationalMatrix() = default;
  explicit SparseRationalMatrix(Index dim);

  static SparseRationalMatrix identity(Index dim);

  Index dim() const { return dim_; }
  std::size_t nonzero_count() const { return entries_.size(); }

  // Returns 0 for absent entries.
  const Rational& at(Index row, Index col) const;
  void set(Index row, Index col, Rational value);
  void add(Index row, Index col, const Rational& value);
  void add_scaled(const SparseRationalMatrix& other, const Rational& scale);
  void scale(const Rational& factor);

  Rational trace() const;
  bool is_symmetric() const;

  const std::map<Key, Rational>& entries() const { return entries_; }

  bool operator==(const SparseRationalMatrix&) const = default;

 private:
  void check_key(Index row, Index col) const;

  Index dim_ = 0;
  std::map<Key, Rational> entries_;
};

// Exact positive-semidefiniteness via rational symmetric elimination:
// a symmetric matrix is PSD iff the elimination below never meets a negative
// pivot or a zero diagonal with a nonzero residual row.
bool is_positive_semidefinite(const SparseRationalMatrix& m);

}  // namespace olab
