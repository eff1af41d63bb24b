#include "olab/sparse_matrix.hpp"

#include <string>
#include <vector>

#include "olab/errors.hpp"

namespace olab {

namespace {
const Rational kZero(0);
}

SparseRationalMatrix::SparseRationalMatrix(Index dim) : dim_(dim) {
  if (dim < 0) throw_contract("matrix dimension must be nonnegative");
}

SparseRationalMatrix SparseRationalMatrix::identity(Index dim) {
  SparseRationalMatrix m(dim);
  for (Index i = 0; i < dim; ++i) m.set(i, i, Rational(1));
  return m;
}

void SparseRationalMatrix::check_key(Index row, Index col) const {
  if (row < 0 || row >= dim_ || col < 0 || col >= dim_) {
    throw_contract("matrix index (" + std::to_string(row) + ", " + std::to_string(col) +
                   ") outside dim " + std::to_string(dim_));
  }
}

const Rational& SparseRationalMatrix::at(Index row, Index col) const {
  check_key(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? kZero : it->second;
}

void SparseRationalMatrix::set(Index row, Index col, Rational value) {
  check_key(row, col);
  if (value == 0) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(value);
  }
}

void SparseRationalMatrix::add(Index row, Index col, const Rational& value) {
  check_key(row, col);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseRationalMatrix::add_scaled(const SparseRationalMatrix& other, const Rational& scale) {
  if (other.dim_ != dim_) throw_contract("add_scaled: dimension mismatch");
  if (scale == 0) return;
  for (const auto& [key, value] : other.entries_) {
    add(key.first, key.second, value * scale);
  }
}

void SparseRationalMatrix::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& [key, value] : entries_) value *= factor;
}

Rational SparseRationalMatrix::trace() const {
  Rational t(0);
  for (Index i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

bool SparseRationalMatrix::is_symmetric() const {
  for (const auto& [key, value] : entries_) {
    if (at(key.second, key.first) != value) return false;
  }
  return true;
}

bool is_positive_semidefinite(const SparseRationalMatrix& m) {
  if (!m.is_symmetric()) return false;
  const auto n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [key, value] : m.entries()) a[key.first][key.second] = value;

  for (SparseRationalMatrix::Index k = 0; k < n; ++k) {
    if (a[k][k] < 0) return false;
    if (a[k][k] == 0) {
      // A PSD matrix with a zero diagonal entry has a zero row.
      for (SparseRationalMatrix::Index j = k; j < n; ++j) {
        if (a[k][j] != 0) return false;
      }
      continue;
    }
    for (SparseRationalMatrix::Index i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational factor = a[i][k] / a[k][k];
      for (SparseRationalMatrix::Index j = k; j < n; ++j) {
        a[i][j] -= factor * a[k][j];
      }
    }
    for (SparseRationalMatrix::Index j = k + 1; j < n; ++j) a[k][j] = 0;
  }
  return true;
}

}  // namespace olab
