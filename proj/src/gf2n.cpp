#include "olab/gf2n.hpp"

#include <string>

#include "olab/errors.hpp"

namespace olab {

namespace {

constexpr std::uint32_t kModuli[5] = {0u, 0b11u, 0b111u, 0b1011u, 0b10011u};

void check_degree(int n) {
  if (n < 1 || n > 4) {
    throw_contract("GF(2^n) supports n in 1..4, got n=" + std::to_string(n));
  }
}

}  // namespace

FieldElement make_field_element(int n, std::uint32_t bits) {
  check_degree(n);
  if (bits >= gf2n_order(n)) {
    throw_contract("field element " + std::to_string(bits) + " outside GF(2^" +
                   std::to_string(n) + ")");
  }
  return FieldElement{n, bits};
}

std::uint32_t gf2n_order(int n) {
  check_degree(n);
  return 1u << n;
}

std::uint32_t gf2n_modulus(int n) {
  check_degree(n);
  return kModuli[n];
}

FieldElement gf_add(FieldElement a, FieldElement b) {
  if (a.n != b.n) throw_contract("gf_add: mismatched field degrees");
  check_degree(a.n);
  return FieldElement{a.n, a.bits ^ b.bits};
}

FieldElement gf_mul(FieldElement a, FieldElement b) {
  if (a.n != b.n) throw_contract("gf_mul: mismatched field degrees");
  check_degree(a.n);
  const std::uint32_t top = 1u << a.n;
  const std::uint32_t mod = gf2n_modulus(a.n);
  std::uint32_t acc = 0;
  std::uint32_t x = a.bits;
  std::uint32_t y = b.bits;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1u;
    x <<= 1u;
    if (x & top) x ^= mod;
  }
  return FieldElement{a.n, acc};
}

}  // namespace olab
