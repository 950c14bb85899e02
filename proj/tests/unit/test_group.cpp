#include <random>

#include "doctest.h"
#include "sunsys/errors.hpp"
#include "sunsys/group.hpp"

using namespace sunsys;

namespace {

// Independent oracle: smallest generator of Z_p^* by listing powers.
int brute_force_primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int x = 1;
    int ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return -1;
}

}  // namespace

TEST_SUITE("group-core") {
  TEST_CASE("add on cyclic and product groups") {
    const auto z7 = group_spec::cyclic(7);
    CHECK(add(z7, z7.make({3}), z7.make({5})) == z7.make({1}));
    const group_spec z7x13({7, 13});
    CHECK(add(z7x13, z7x13.make({2, 1}), z7x13.make({5, 12})) == z7x13.make({0, 0}));
    const auto a = z7x13.make({4, 9});
    CHECK(add(z7x13, a, z7x13.zero()) == a);
  }

  TEST_CASE("neg") {
    const auto z7 = group_spec::cyclic(7);
    CHECK(neg(z7, z7.make({3})) == z7.make({4}));
    const group_spec z7x13({7, 13});
    CHECK(neg(z7x13, z7x13.zero()) == z7x13.zero());
    CHECK(neg(z7x13, z7x13.make({2, 5})) == z7x13.make({5, 8}));
  }

  TEST_CASE("mismatched operands are rejected") {
    const auto z7 = group_spec::cyclic(7);
    const group_spec z7x13({7, 13});
    CHECK_THROWS_AS(add(z7, z7.make({1}), z7x13.make({1, 1})), spec_mismatch_error);
    CHECK_THROWS_AS(neg(z7, group_element{9}), spec_mismatch_error);
  }

  TEST_CASE("GF(49) multiplication") {
    const auto f = group_spec::galois_square(7);
    CHECK(f.field_square() == 6);  // x^2 = -1
    const auto x = f.make({0, 1});
    CHECK(field_mul(f, x, x) == f.make({6, 0}));
    const auto a = f.make({3, 5});
    CHECK(field_mul(f, a, f.one()) == a);
    const auto r = primitive_root(f);
    CHECK(multiplicative_order(f, r) == 48);
    CHECK(field_mul(f, r, field_pow(f, r, 47)) == f.one());
  }

  TEST_CASE("GF(p^2) with p = 1 mod 4 uses a non-residue") {
    const auto f = group_spec::galois_square(5);
    CHECK(f.field_square() == 2);
    CHECK(multiplicative_order(f, primitive_root(f)) == 24);
  }

  TEST_CASE("field operations on non-fields") {
    const group_spec z7x13({7, 13});
    CHECK_THROWS_AS(field_mul(z7x13, z7x13.zero(), z7x13.zero()), not_a_field_error);
    CHECK_THROWS_AS(primitive_root(group_spec::cyclic(15)), not_a_field_error);
  }

  TEST_CASE("primitive roots of small primes match a brute-force oracle") {
    // Frozen oracle values: Z_7 -> 3, Z_13 -> 2, Z_5 -> 2.
    CHECK(brute_force_primitive_root(7) == 3);
    CHECK(brute_force_primitive_root(13) == 2);
    CHECK(brute_force_primitive_root(5) == 2);
    CHECK(primitive_root(group_spec::cyclic(7)) == group_element{3});
    CHECK(primitive_root(group_spec::cyclic(13)) == group_element{2});
    CHECK(primitive_root(group_spec::cyclic(5)) == group_element{2});
  }

  TEST_CASE("property: primitive root has order p-1") {
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53}) {
      const auto z = group_spec::cyclic(p);
      const auto r = primitive_root(z);
      CHECK(multiplicative_order(z, r) == p - 1);
      CHECK(r[0] == brute_force_primitive_root(p));
    }
  }

  TEST_CASE("property: additive group laws on random triples") {
    std::mt19937 rng(12345);
    const group_spec g({7, 15, 4});
    std::uniform_int_distribution<long long> pick(0, g.order() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = g.from_index(pick(rng));
      const auto b = g.from_index(pick(rng));
      const auto c = g.from_index(pick(rng));
      CHECK(add(g, add(g, a, b), c) == add(g, a, add(g, b, c)));
      CHECK(add(g, a, b) == add(g, b, a));
      CHECK(neg(g, neg(g, a)) == a);
      CHECK(add(g, a, neg(g, a)) == g.zero());
    }
  }

  TEST_CASE("property: field multiplication distributes over addition in GF(49)") {
    std::mt19937 rng(777);
    const auto f = group_spec::galois_square(7);
    std::uniform_int_distribution<long long> pick(0, f.order() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const auto a = f.from_index(pick(rng));
      const auto b = f.from_index(pick(rng));
      const auto c = f.from_index(pick(rng));
      CHECK(field_mul(f, a, add(f, b, c)) == add(f, field_mul(f, a, b), field_mul(f, a, c)));
      CHECK(field_mul(f, a, b) == field_mul(f, b, a));
    }
  }

  TEST_CASE("element indexing is lexicographic") {
    const group_spec g({3, 4});
    const auto all = g.elements();
    REQUIRE(all.size() == 12);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(g.index_of(all[i]) == static_cast<long long>(i));
  }

  TEST_CASE("generated subgroup") {
    const group_spec g({7, 13});
    const auto h = generated_subgroup(g, {g.make({1, 0})});
    CHECK(h.size() == 7);
    for (const auto& x : h) CHECK(x[1] == 0);
  }
}
