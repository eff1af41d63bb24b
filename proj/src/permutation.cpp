#include "olab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "olab/errors.hpp"

namespace olab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  const int m = degree();
  for (int v : images_) {
    if (v < 1 || v > m || seen[index0(v)]) {
      throw_contract("permutation images are not a bijection on [" + std::to_string(m) + "]");
    }
    seen[index0(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::cyclic_shift(int m, int amount) {
  std::vector<int> images(m);
  for (int y = 1; y <= m; ++y) {
    int r = (index0(y) + amount) % m;
    if (r < 0) r += m;
    images[index0(y)] = value1(r);
  }
  return Permutation(std::move(images));
}

int Permutation::apply(int y) const {
  if (y < 1 || y > degree()) {
    throw_contract("permutation argument " + std::to_string(y) + " outside [1, " +
                   std::to_string(degree()) + "]");
  }
  return images_[index0(y)];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int y = 1; y <= degree(); ++y) {
    inv[index0(images_[index0(y)])] = y;
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (q.degree() != degree()) {
    throw_contract("composing permutations of different degree");
  }
  std::vector<int> images(images_.size());
  for (int y = 1; y <= degree(); ++y) {
    images[index0(y)] = apply(q.apply(y));
  }
  return Permutation(std::move(images));
}

std::string Permutation::one_line() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s;
}

int pair_fixing_count(const Permutation& p) {
  // Ordered pairs (x, p(x)) with p(p(x)) = x; one pair per such x.
  int count = 0;
  for (int x = 1; x <= p.degree(); ++x) {
    if (p.apply(p.apply(x)) == x) ++count;
  }
  return count;
}

bool is_fixed_point_free_involution(const Permutation& p) {
  for (int x = 1; x <= p.degree(); ++x) {
    if (p.apply(x) == x) return false;
    if (p.apply(p.apply(x)) != x) return false;
  }
  return true;
}

bool is_full_cycle(const Permutation& p) {
  const int m = p.degree();
  if (m == 0) return false;
  int x = 1;
  for (int steps = 1; steps < m; ++steps) {
    x = p.apply(x);
    if (x == 1) return false;
  }
  return p.apply(x) == 1;
}

namespace {

void check_enumeration_cap(int m, const Caps& caps) {
  if (m > caps.max_enumeration_degree) {
    throw_cap("permutation enumeration for M=" + std::to_string(m) +
              " exceeds the configured cap M<=" + std::to_string(caps.max_enumeration_degree));
  }
}

}  // namespace

std::vector<Permutation> enumerate_all_permutations(int m, const Caps& caps) {
  if (m < 1) throw_contract("enumerate_all_permutations requires M >= 1");
  check_enumeration_cap(m, caps);
  std::vector<int> images(m);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> enumerate_fixed_point_free_involutions(int m, const Caps& caps) {
  if (m < 1 || m % 2 != 0) {
    throw_contract("no fixed-point-free involution exists on [" + std::to_string(m) +
                   "]: M must be even and positive");
  }
  check_enumeration_cap(m, caps);
  std::vector<Permutation> out;
  for (const auto& p : enumerate_all_permutations(m, caps)) {
    if (is_fixed_point_free_involution(p)) out.push_back(p);
  }
  return out;
}

std::vector<Permutation> enumerate_full_cycles(int m, const Caps& caps) {
  if (m < 2) throw_contract("enumerate_full_cycles requires M >= 2");
  check_enumeration_cap(m, caps);
  std::vector<Permutation> out;
  for (const auto& p : enumerate_all_permutations(m, caps)) {
    if (is_full_cycle(p)) out.push_back(p);
  }
  return out;
}

}  // namespace olab
