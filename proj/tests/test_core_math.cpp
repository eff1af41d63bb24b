#include <doctest.h>

#include <map>
#include <set>

#include "olab/errors.hpp"
#include "olab/gf2n.hpp"
#include "olab/oracle_constructors.hpp"
#include "olab/permutation.hpp"
#include "olab/rational.hpp"
#include "olab/sparse_matrix.hpp"
#include "test_util.hpp"

using namespace olab;

TEST_SUITE_BEGIN("core-math");

TEST_CASE("permutation_apply on explicit tables") {
  CHECK(Permutation::identity(4).apply(3) == 3);
  CHECK(Permutation({2, 1, 4, 3}).apply(1) == 2);
  CHECK(Permutation({2, 3, 4, 1}).apply(4) == 1);
  CHECK_THROWS_AS(Permutation::identity(4).apply(0), Error);
  CHECK_THROWS_AS(Permutation::identity(4).apply(5), Error);
}

TEST_CASE("permutation invariants") {
  CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
  CHECK_THROWS_AS(Permutation({1, 2, 4}), Error);
  for (const auto& images : testutil::brute_permutations(4)) {
    const Permutation p(images);
    CHECK(p.compose(p.inverse()) == Permutation::identity(4));
    CHECK(p.inverse().compose(p) == Permutation::identity(4));
  }
}

TEST_CASE("cyclic shift convention") {
  // y -> ((y - 1 + v) mod N) + 1; shifting by N is the identity.
  const auto shift1 = Permutation::cyclic_shift(4, 1);
  CHECK(shift1.apply(1) == 2);
  CHECK(shift1.apply(4) == 1);
  CHECK(Permutation::cyclic_shift(4, 4) == Permutation::identity(4));
  CHECK(Permutation::cyclic_shift(4, -1) == Permutation::cyclic_shift(4, 3));
}

TEST_CASE("fixed-point-free involution enumeration") {
  // Frozen counts verified against a brute-force filter of S_M.
  CHECK(enumerate_fixed_point_free_involutions(2).size() == 1);
  CHECK(enumerate_fixed_point_free_involutions(2).front() == Permutation({2, 1}));
  CHECK(enumerate_fixed_point_free_involutions(4).size() == 3);
  CHECK(enumerate_fixed_point_free_involutions(6).size() == 15);  // 5!! = 15

  for (int m : {2, 4}) {
    std::set<std::vector<int>> brute;
    for (const auto& images : testutil::brute_permutations(m)) {
      if (testutil::brute_is_fpf_involution(images)) brute.insert(images);
    }
    std::set<std::vector<int>> produced;
    for (const auto& p : enumerate_fixed_point_free_involutions(m)) produced.insert(p.images());
    CHECK(produced == brute);
  }

  CHECK_THROWS_AS(enumerate_fixed_point_free_involutions(3), Error);
  CHECK_THROWS_AS(enumerate_fixed_point_free_involutions(8), Error);  // default cap M <= 6
  CHECK(enumerate_fixed_point_free_involutions(8, Caps::unlimited()).size() == 105);
}

TEST_CASE("full cycle enumeration") {
  CHECK(enumerate_full_cycles(2).size() == 1);
  CHECK(enumerate_full_cycles(2).front() == Permutation({2, 1}));
  CHECK(enumerate_full_cycles(3).size() == 2);
  CHECK(enumerate_full_cycles(4).size() == 6);

  for (int m : {3, 4, 5}) {
    std::size_t brute = 0;
    for (const auto& images : testutil::brute_permutations(m)) {
      if (testutil::brute_is_full_cycle(images)) ++brute;
    }
    CHECK(enumerate_full_cycles(m).size() == brute);
  }
  CHECK_THROWS_AS(enumerate_full_cycles(9), Error);
}

TEST_CASE("enumeration completeness against brute-force classification") {
  // The classes overlap only at M = 2, where the transposition is both.
  for (int m : {2, 4}) {
    const auto all = enumerate_all_permutations(m);
    CHECK(all.size() == static_cast<std::size_t>(factorial(m)));
    std::size_t involutions = 0, cycles = 0, both = 0;
    for (const auto& p : all) {
      const bool inv = is_fixed_point_free_involution(p);
      const bool cyc = is_full_cycle(p);
      involutions += inv;
      cycles += cyc;
      both += inv && cyc;
    }
    CHECK(involutions == enumerate_fixed_point_free_involutions(m).size());
    CHECK(cycles == enumerate_full_cycles(m).size());
    CHECK(both == (m == 2 ? 1u : 0u));
  }
}

TEST_CASE("pair fixing count") {
  CHECK(pair_fixing_count(Permutation({2, 1, 4, 3})) == 4);  // fixed-point-free involution
  CHECK(pair_fixing_count(Permutation({2, 3, 4, 1})) == 0);  // 4-cycle
  CHECK(pair_fixing_count(Permutation::identity(3)) == 3);   // (x, x) pairs

  // pair_fixing_count(p) = |{x : p(p(x)) = x}|, exhaustively for M <= 5.
  for (int m = 1; m <= 5; ++m) {
    for (const auto& images : testutil::brute_permutations(m)) {
      const Permutation p(images);
      CHECK(pair_fixing_count(p) == testutil::brute_pair_fixing_count(images));
      int self_paired = 0;
      for (int x = 1; x <= m; ++x) {
        if (p.apply(p.apply(x)) == x) ++self_paired;
      }
      CHECK(pair_fixing_count(p) == self_paired);
    }
  }
}

TEST_CASE("gf2n arithmetic") {
  const auto e = [](int n, std::uint32_t bits) { return make_field_element(n, bits); };

  // gf_add(x, x) = 0 and mul identity, all degrees.
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t a = 0; a < gf2n_order(n); ++a) {
      CHECK(gf_add(e(n, a), e(n, a)).bits == 0);
      CHECK(gf_mul(e(n, 1), e(n, a)).bits == a);
    }
  }

  // t * t = t + 1 mod x^2 + x + 1.
  CHECK(gf_mul(e(2, 2), e(2, 2)).bits == 3);

  // Full multiplication table against schoolbook reduction.
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t a = 0; a < gf2n_order(n); ++a) {
      for (std::uint32_t b = 0; b < gf2n_order(n); ++b) {
        CHECK(gf_mul(e(n, a), e(n, b)).bits ==
              testutil::brute_gf2_mul(a, b, gf2n_modulus(n), n));
      }
    }
  }

  CHECK_THROWS_AS(gf_add(e(2, 1), e(3, 1)), Error);
  CHECK_THROWS_AS(make_field_element(2, 4), Error);
  CHECK_THROWS_AS(make_field_element(5, 0), Error);
}

TEST_CASE("gf2n multiplicative inverses exist") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t a = 1; a < gf2n_order(n); ++a) {
      bool found = false;
      for (std::uint32_t b = 1; b < gf2n_order(n); ++b) {
        if (gf_mul(make_field_element(n, a), make_field_element(n, b)).bits == 1) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("rationals stay canonical") {
  const Rational half = parse_rational("2/4");
  CHECK(numerator(half) == 1);
  CHECK(denominator(half) == 2);
  CHECK(fraction_string(half) == "1/2");
  CHECK(fraction_string(parse_rational("-3/6")) == "-1/2");
  CHECK(fraction_string(parse_rational("7")) == "7/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);

  // All four operations preserve lowest terms / positive denominator.
  const std::vector<Rational> values = {Rational(3, 4), Rational(-5, 6), Rational(7, 2),
                                        Rational(1, 3)};
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& r : {Rational(a + b), Rational(a - b), Rational(a * b), Rational(a / b)}) {
        CHECK(denominator(r) > 0);
        CHECK(gcd(BigInt(abs(numerator(r))), denominator(r)) == 1);
      }
    }
  }

  // A probability vector sums to exactly 1.
  Rational sum(0);
  for (int i = 1; i <= 6; ++i) sum += Rational(1, 6);
  CHECK(sum == 1);
  CHECK(rational_pow(Rational(1, 2), 7) == Rational(1, 128));
}

TEST_CASE("sparse rational matrices") {
  SparseRationalMatrix m(3);
  m.set(0, 1, Rational(1, 2));
  m.add(0, 1, Rational(1, 2));
  CHECK(m.at(0, 1) == 1);
  m.add(0, 1, Rational(-1));
  CHECK(m.nonzero_count() == 0);  // exact cancellation removes the entry

  SparseRationalMatrix a(2), b(2);
  a.set(0, 0, Rational(1, 3));
  b.add(0, 0, Rational(2, 6));
  CHECK(a == b);

  CHECK(SparseRationalMatrix::identity(4).trace() == 4);
  CHECK_THROWS_AS(m.at(3, 0), Error);

  // Row-major canonical iteration order.
  SparseRationalMatrix c(2);
  c.set(1, 0, Rational(1));
  c.set(0, 1, Rational(2));
  std::vector<std::pair<std::int64_t, std::int64_t>> order;
  for (const auto& [key, value] : c.entries()) order.push_back(key);
  CHECK(order == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 1}, {1, 0}});
}

TEST_CASE("exact positive semidefiniteness") {
  auto sym = SparseRationalMatrix(2);
  sym.set(0, 0, Rational(1));
  sym.set(0, 1, Rational(1, 2));
  sym.set(1, 0, Rational(1, 2));
  sym.set(1, 1, Rational(1));
  CHECK(is_positive_semidefinite(sym));

  sym.set(1, 1, Rational(1, 5));  // determinant negative
  CHECK_FALSE(is_positive_semidefinite(sym));

  auto zero_diag = SparseRationalMatrix(2);
  zero_diag.set(0, 1, Rational(1));
  zero_diag.set(1, 0, Rational(1));
  CHECK_FALSE(is_positive_semidefinite(zero_diag));
  CHECK(is_positive_semidefinite(SparseRationalMatrix(3)));
}

TEST_SUITE_END();
