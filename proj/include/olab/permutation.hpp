#pragma once

#include <string>
#include <vector>

#include "olab/caps.hpp"

namespace olab {

// Centralized 1-based <-> 0-based conversion. Domain values live in
// [M] = {1..M}; flat array offsets are 0-based.
constexpr int index0(int value_1based) { return value_1based - 1; }
constexpr int value1(int index_0based) { return index_0based + 1; }

// Permutation on [M] in one-line notation: images()[i] is the image of i+1.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijection

  static Permutation identity(int m);
  // y -> ((y - 1 + amount) mod m) + 1; any integer amount is accepted.
  static Permutation cyclic_shift(int m, int amount);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int y) const;  // contract: 1 <= y <= degree

  Permutation inverse() const;
  // compose(q) applies q first, then this: result(y) = this(q(y)).
  Permutation compose(const Permutation& q) const;

  const std::vector<int>& images() const { return images_; }
  std::string one_line() const;  // "2,1,4,3"

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// |{(x, y) : p(x) = y and p(y) = x}|; fixed points contribute (x, x).
int pair_fixing_count(const Permutation& p);

bool is_fixed_point_free_involution(const Permutation& p);
bool is_full_cycle(const Permutation& p);

// All of S_M in lexicographic one-line order. Refuses M above the cap.
std::vector<Permutation> enumerate_all_permutations(int m, const Caps& caps = {});
// Throws an empty-set error for odd M (none exist) and refuses above the cap.
std::vector<Permutation> enumerate_fixed_point_free_involutions(int m, const Caps& caps = {});
// All M-cycles, M >= 2.
std::vector<Permutation> enumerate_full_cycles(int m, const Caps& caps = {});

}  // namespace olab
