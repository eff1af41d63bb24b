#pragma once

#include <cstdint>

namespace olab {

// Element of GF(2^n) for n in 1..4, bit-vector representation. Addition is
// XOR; multiplication reduces by a fixed low-weight polynomial per degree:
//   n=1: x+1,  n=2: x^2+x+1,  n=3: x^3+x+1,  n=4: x^4+x+1.
struct FieldElement {
  int n = 1;
  std::uint32_t bits = 0;

  bool operator==(const FieldElement&) const = default;
};

FieldElement make_field_element(int n, std::uint32_t bits);

std::uint32_t gf2n_order(int n);    // 2^n
std::uint32_t gf2n_modulus(int n);  // reduction polynomial bit-pattern

FieldElement gf_add(FieldElement a, FieldElement b);
FieldElement gf_mul(FieldElement a, FieldElement b);

}  // namespace olab
