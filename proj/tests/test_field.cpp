#include <cstdint>
#include <vector>

#include "doctest.h"
#include "kleinzeta/errors.hpp"
#include "kleinzeta/field.hpp"

using namespace kleinzeta;

TEST_SUITE("field") {

TEST_CASE("modulus and generator are the canonical choices") {
  Field F8 = build_field(2, 3);
  CHECK(F8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(F8.generator() == 2);

  Field F4 = build_field(2, 2);
  CHECK(F4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(F4.generator() == 2);

  Field F9 = build_field(3, 2);
  CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(F9.generator() == 4);

  Field F64 = build_field(2, 6);
  CHECK(F64.modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 1});
  CHECK(F64.generator() == 2);

  Field F512 = build_field(2, 9);
  CHECK(F512.modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 0, 0, 0, 0, 0, 1});

  CHECK(build_field(7, 1).generator() == 3);
  CHECK(build_field(13, 1).generator() == 2);
  CHECK(build_field(29, 1).generator() == 2);
  CHECK(build_field(43, 1).generator() == 3);
}

TEST_CASE("prime field arithmetic is mod p") {
  Field F7 = build_field(7, 1);
  CHECK(F7.add(5, 4) == 2);
  CHECK(F7.mul(5, 4) == 6);
  CHECK(F7.neg(3) == 4);
  CHECK(F7.sub(1, 5) == 3);
  CHECK(F7.inv(3) == 5);
  CHECK(F7.log(6) == 3);  // 3^3 = 27 = 6
  CHECK(F7.exp(3) == 6);
}

TEST_CASE("extension arithmetic satisfies the ring axioms exhaustively") {
  for (auto [p, r] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}}) {
    Field F = build_field(p, r);
    Elem q = F.q();
    for (Elem a = 0; a < q; ++a) {
      CHECK(F.add(a, F.zero()) == a);
      CHECK(F.mul(a, F.one()) == a);
      CHECK(F.add(a, F.neg(a)) == 0);
      for (Elem b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("char-2 addition is xor and doubles vanish") {
  Field F8 = build_field(2, 3);
  for (Elem a = 0; a < 8; ++a) {
    CHECK(F8.add(a, a) == 0);
    for (Elem b = 0; b < 8; ++b) CHECK(F8.add(a, b) == (a ^ b));
  }
}

TEST_CASE("exp and log are inverse on the unit group") {
  Field F = build_field(2, 6);
  for (Elem a = 1; a < F.q(); ++a) {
    CHECK(F.exp(F.log(a)) == a);
    CHECK(F.mul(a, F.inv(a)) == F.one());
  }
  CHECK(F.log(F.one()) == 0);
  CHECK_THROWS_AS((void)F.inv(0), std::domain_error);
}

TEST_CASE("pow edge cases") {
  Field F = build_field(5, 1);
  CHECK(F.pow(0, 0) == 1);
  CHECK(F.pow(0, 5) == 0);
  CHECK(F.pow(F.generator(), F.q() - 1) == 1);
  CHECK(F.pow(2, 3) == 3);
}

TEST_CASE("trace is additive and lands in the prime field") {
  Field F8 = build_field(2, 3);
  CHECK(F8.trace(2) == 0);  // trace of the x-class
  for (Elem a = 0; a < 8; ++a) {
    CHECK(F8.trace(a) < 2);
    for (Elem b = 0; b < 8; ++b)
      CHECK(F8.trace(F8.add(a, b)) == ((F8.trace(a) + F8.trace(b)) % 2));
  }
  // trace is onto: both values occur
  unsigned ones = 0;
  for (Elem a = 0; a < 8; ++a) ones += F8.trace(a);
  CHECK(ones == 4);
}

TEST_CASE("norm is multiplicative and fixes the prime field pointwise") {
  Field F9 = build_field(3, 2);
  CHECK(F9.norm(F9.generator()) == 2);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b)
      CHECK(F9.norm(F9.mul(a, b)) == (F9.norm(a) * F9.norm(b)) % 3);
  Field F7 = build_field(7, 1);
  for (Elem a = 0; a < 7; ++a) CHECK(F7.norm(a) == a);
}

TEST_CASE("digit packing round trips") {
  Field F8 = build_field(2, 3);
  for (Elem a = 0; a < 8; ++a) CHECK(F8.from_digits(F8.digits(a)) == a);
  CHECK(F8.from_digits({0, 1}) == 2);
  Field F9 = build_field(3, 2);
  CHECK(F9.digits(4) == std::vector<std::uint32_t>{1, 1});
  CHECK_THROWS_AS((void)F9.from_digits({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS((void)F9.from_digits({3}), std::invalid_argument);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(build_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_field(2, 25), budget_error);
  CHECK_THROWS_AS(build_field(2, 3, 4), budget_error);
}

TEST_CASE("same_field distinguishes fields") {
  Field a = build_field(2, 3);
  Field b = build_field(2, 3);
  Field c = build_field(3, 2);
  CHECK(a.same_field(b));
  CHECK_FALSE(a.same_field(c));
}

TEST_CASE("prime and prime power enumeration is inclusive and ordered") {
  CHECK(primes_up_to(29) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1).empty());

  auto pps = prime_powers_up_to(32);
  std::vector<std::uint32_t> qs;
  for (const auto& pp : pps) {
    qs.push_back(pp.q);
    std::uint32_t v = 1;
    for (unsigned i = 0; i < pp.r; ++i) v *= pp.p;
    CHECK(v == pp.q);
    CHECK(is_prime(pp.p));
  }
  CHECK(qs == std::vector<std::uint32_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25,
                                         27, 29, 31, 32});
}

TEST_CASE("primality and multiplicative order helpers") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(7917));
  CHECK(order_mod(2, 7) == 3);
  CHECK(order_mod(3, 7) == 6);
  CHECK(order_mod(6, 7) == 2);
  CHECK(order_mod(1, 7) == 1);
  CHECK_THROWS_AS((void)order_mod(7, 7), std::invalid_argument);
}

}  // TEST_SUITE
