#include <cstdint>
#include <vector>

#include "doctest.h"
#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/field.hpp"
#include "kleinzeta/hecke.hpp"
#include "kleinzeta/zeta.hpp"

using namespace kleinzeta;

TEST_SUITE("hecke") {

TEST_CASE("4p = a^2 + 7b^2 representations") {
  auto r2 = cornacchia_4p(2);
  REQUIRE(r2.has_value());
  CHECK(r2->first == 1);
  CHECK(r2->second == 1);
  auto r11 = cornacchia_4p(11);
  REQUIRE(r11.has_value());
  CHECK(r11->first == 4);
  CHECK(r11->second == 2);
  auto r29 = cornacchia_4p(29);
  REQUIRE(r29.has_value());
  CHECK(r29->first == 2);
  CHECK(r29->second == 4);
  CHECK_FALSE(cornacchia_4p(3).has_value());
  CHECK_FALSE(cornacchia_4p(5).has_value());
  CHECK_FALSE(cornacchia_4p(13).has_value());
  CHECK_THROWS_AS((void)cornacchia_4p(7), std::invalid_argument);
  CHECK_THROWS_AS((void)cornacchia_4p(15), std::invalid_argument);
  // representation exists exactly for split residues, and is a true identity
  for (std::uint32_t p : primes_up_to(500)) {
    if (p == 7) continue;
    auto rep = cornacchia_4p(p);
    unsigned res = p % 7;
    bool split = res == 1 || res == 2 || res == 4;
    CHECK(rep.has_value() == split);
    if (rep) {
      CHECK(rep->first * rep->first + 7 * rep->second * rep->second == 4 * std::int64_t(p));
      CHECK(rep->first > 0);
      CHECK(rep->second > 0);
    }
  }
}

TEST_CASE("hecke character normalization") {
  CHECK(hecke_char(2) == QuadInt7(1, 1));
  CHECK(hecke_char(29) == QuadInt7(2, 4));
  CHECK(hecke_char(43) == QuadInt7(-12, 2));  // a = 2 mod 7 after sign flip
  CHECK(hecke_char(13) == QuadInt7(-26, 0));  // inert: -p
  CHECK(hecke_char(3) == QuadInt7(-6, 0));
  CHECK(hecke_char(7) == QuadInt7(0, 0));
  for (std::uint32_t p : primes_up_to(300)) {
    if (p == 7) continue;
    QuadInt7 v = hecke_char(p);
    unsigned res = p % 7;
    if (res == 1 || res == 2 || res == 4) {
      CHECK(v.norm() == p);
      BigInt am = ((v.a % 7) + 7) % 7;
      CHECK((am == 1 || am == 2 || am == 4));
      CHECK(v.b > 0);
    } else {
      CHECK(v == QuadInt7(-2 * std::int64_t(p), 0));
    }
  }
}

TEST_CASE("cubic residue character mod 7") {
  const unsigned expected[7] = {0, 0, 1, 2, 2, 1, 0};  // index = p mod 7
  for (std::uint32_t p : {2u, 3u, 5u, 11u, 13u, 29u, 43u, 71u, 113u}) {
    CHECK(chi7_exponent(p) == expected[p % 7]);
  }
  CHECK(chi7_exponent(3) == 2);
  CHECK_THROWS_AS((void)chi7_exponent(7), std::invalid_argument);
  // multiplicativity on units mod 7
  for (unsigned a = 1; a <= 6; ++a)
    for (unsigned b = 1; b <= 6; ++b)
      CHECK(chi7_exponent(a * b) == (chi7_exponent(a) + chi7_exponent(b)) % 3);
}

TEST_CASE("eigenvalue triples") {
  ApTriple t2 = ap_triple(2);
  CHECK(t2.a0.rational_value() == 1);
  CHECK(t2.ap[0] == CyclotomicInt::from_int(3, 1));
  CHECK(t2.ap[1] == CyclotomicInt::zeta_power(3, 1));       // chi7(2) = omega
  CHECK(t2.ap[2] == CyclotomicInt::zeta_power(3, 2));
  CHECK(t2.neben[0].rational_value() == 1);
  CHECK(t2.neben[1] == CyclotomicInt::zeta_power(3, 2));
  CHECK(t2.neben[2] == CyclotomicInt::zeta_power(3, 4 % 3));

  ApTriple t13 = ap_triple(13);
  CHECK(t13.a0.is_zero());
  for (unsigned j = 0; j < 3; ++j) {
    CHECK(t13.ap[j].is_zero());
    CHECK(t13.neben[j].rational_value() == 1);  // chi7(13) = 1
  }

  ApTriple t29 = ap_triple(29);
  CHECK(t29.a0.rational_value() == 2);
  for (unsigned j = 0; j < 3; ++j) CHECK(t29.neben[j].rational_value() == 1);

  // nebentypus values multiply to 1 (product of the three conjugates)
  for (std::uint32_t p : {2u, 3u, 5u, 11u, 13u, 23u, 29u}) {
    ApTriple t = ap_triple(p);
    CHECK((t.neben[0] * t.neben[1] * t.neben[2]).rational_value() == 1);
  }
}

TEST_CASE("euler products collapse to integer polynomials") {
  CHECK(euler_product(2) == std::vector<BigInt>{1, 0, 0, 5, 0, 0, 8});
  CHECK(euler_product(3) == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 27});
  CHECK(euler_product(29) ==
        std::vector<BigInt>{1, -6, 99, -356, 2871, -5046, 24389});
  CHECK(euler_product(13) == std::vector<BigInt>{1, 0, 39, 0, 507, 0, 2197});
}

TEST_CASE("modularity of the klein numerator at small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 11u, 13u, 23u, 29u, 43u, 71u, 113u}) {
    Theorem1Report rep = verify_theorem1(p);
    CHECK(rep.match);
    CHECK(rep.curve_side == rep.modular_side);
    CHECK(rep.frob_order == order_mod(p, 7));
  }
  CHECK_THROWS_AS((void)verify_theorem1(7), std::invalid_argument);
}

TEST_CASE("jacobi sums land on hecke values") {
  for (std::uint32_t p : {29u, 43u, 71u, 113u, 127u}) {
    JacobiHeckeValue v = jacobi_hecke(p);
    CHECK(v.frob_order == 1);
    QuadInt7 h = hecke_char(p);
    CHECK((v.value == h || v.value == h.conj()));
  }
  JacobiHeckeValue v2 = jacobi_hecke(2);
  CHECK(v2.frob_order == 3);
  CHECK(v2.value.norm() == 8);
}

TEST_CASE("weight-2 level-27 eigenvalues") {
  CHECK(fc3_ap(7) == -1);
  CHECK(fc3_ap(13) == 5);
  CHECK(fc3_ap(2) == 0);
  CHECK(fc3_ap(5) == 0);
  CHECK(fc3_ap(3) == 0);
  // Hasse bound and the point count relation N_p = p + 1 - a_p
  for (std::uint32_t p : primes_up_to(100)) {
    if (p == 3) continue;
    std::int64_t a = fc3_ap(p);
    CHECK(a * a <= 4 * std::int64_t(p));
    Field F = build_field(p, 1);
    std::uint64_t n = count_projective_brute(F, CurveModel::fermat(3));
    CHECK(std::int64_t(p) + 1 - std::int64_t(n) == a);
  }
}

}  // TEST_SUITE
