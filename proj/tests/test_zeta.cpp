#include <cstdint>
#include <vector>

#include "doctest.h"
#include "kleinzeta/curves.hpp"
#include "kleinzeta/errors.hpp"
#include "kleinzeta/field.hpp"
#include "kleinzeta/zeta.hpp"

using namespace kleinzeta;

namespace {
const std::vector<BigInt> klein2 = {1, 0, 0, 5, 0, 0, 8};

// numerator of the n=7 Fermat curve over F_8, genus 15
const std::vector<BigInt> fermat7_f8 = {
    BigInt(1),
    BigInt(12),
    BigInt(99),
    BigInt(742),
    BigInt(4767),
    BigInt(26544),
    BigInt(136997),
    BigInt(652830),
    BigInt(2854104),
    BigInt(11701728),
    BigInt(45246432),
    BigInt(163705920),
    BigInt(559371008),
    BigInt(1815830016),
    BigInt(5563630848LL),
    BigInt(16126406144LL),
    BigInt(44509046784LL),
    BigInt(116213121024LL),
    BigInt(286397956096LL),
    BigInt(670539448320LL),
    BigInt(1482635083776LL),
    BigInt(3067537784832LL),
    BigInt(5985489911808LL),
    BigInt(10952669921280LL),
    BigInt(18387426082816LL),
    BigInt(28501402976256LL),
    BigInt(40948218200064LL),
    BigInt(50989851738112LL),
    BigInt(54425825574912LL),
    BigInt(52776558133248LL),
    BigInt(35184372088832LL)};
}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("newton identities round trip the count tower") {
  std::vector<std::uint64_t> counts = {3, 5, 24, 17, 33, 38};
  auto s = power_sums_from_counts(2, counts);
  CHECK(s[0] == 0);
  CHECK(s[2] == -15);
  NumeratorPoly P = numerator_from_power_sums(2, 3, s);
  CHECK(P.b == klein2);
  auto back = counts_from_numerator(P, 6);
  for (unsigned i = 0; i < 6; ++i) CHECK(back[i] == counts[i]);
}

TEST_CASE("inconsistent counts are rejected") {
  std::vector<std::uint64_t> counts = {3, 5, 25, 17, 33, 38};
  auto s = power_sums_from_counts(2, counts);
  CHECK_THROWS_AS((void)numerator_from_power_sums(2, 3, s), integrity_error);
}

TEST_CASE("functional equation and unit-circle residual") {
  NumeratorPoly good{2, 3, klein2};
  CHECK(functional_equation_holds(good));
  CHECK(rh_max_residual(good) < 1e-9);

  NumeratorPoly broken{2, 3, {1, 0, 0, 5, 0, 1, 8}};
  CHECK_FALSE(functional_equation_holds(broken));

  // functional equation holds but the roots are off the circle
  NumeratorPoly off{2, 1, {1, 5, 2}};
  CHECK(functional_equation_holds(off));
  CHECK(rh_max_residual(off) > 0.5);
}

TEST_CASE("klein zeta numerators by splitting type") {
  CHECK(zeta_klein(2).numerator.b == klein2);                       // order 3
  CHECK(zeta_klein(3).numerator.b == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 27});
  CHECK(zeta_klein(5).numerator.b == std::vector<BigInt>{1, 0, 0, 0, 0, 0, 125});
  CHECK(zeta_klein(13).numerator.b ==
        std::vector<BigInt>{1, 0, 39, 0, 507, 0, 2197});            // order 2
  CHECK(zeta_klein(29).numerator.b ==
        std::vector<BigInt>{1, -6, 99, -356, 2871, -5046, 24389});  // split
  CHECK(zeta_klein(43).numerator.b ==
        std::vector<BigInt>{1, 36, 561, 4824, 24123, 66564, 79507});
  CHECK(zeta_klein(11).numerator.b ==
        std::vector<BigInt>{1, 0, 0, 68, 0, 0, 1331});
  CHECK(zeta_klein(23).numerator.b ==
        std::vector<BigInt>{1, 0, 0, 40, 0, 0, 12167});
  CHECK(zeta_klein(2).r == 1);
  CHECK_THROWS_AS((void)zeta_klein(7), std::invalid_argument);
  CHECK_THROWS_AS((void)zeta_klein(1031), budget_error);  // needs F_{1031^3}
}

TEST_CASE("klein numerators recover the count towers") {
  for (std::uint32_t p : {2u, 3u}) {
    NumeratorPoly P = zeta_klein(p).numerator;
    auto counts = counts_from_numerator(P, 6);
    for (unsigned r = 1; r <= 6; ++r) {
      Field F = build_field(p, r);
      CHECK(counts[r - 1] == count_projective_brute(F, CurveModel::klein()));
    }
  }
}

TEST_CASE("fermat zeta numerators") {
  ZetaFunction z3 = zeta_fermat(7, 3);
  CHECK(z3.r == 1);
  CHECK(z3.numerator.b == std::vector<BigInt>{1, 1, 7});
  ZetaFunction z34 = zeta_fermat(2, 3);
  CHECK(z34.r == 2);
  CHECK(z34.numerator.b == std::vector<BigInt>{1, 4, 4});
  ZetaFunction z7 = zeta_fermat(2, 7);
  CHECK(z7.r == 3);
  CHECK(z7.numerator.b == fermat7_f8);
  CHECK(zeta_fermat(2, 1).numerator.b == std::vector<BigInt>{1});
  CHECK_THROWS_AS((void)zeta_fermat(7, 7), std::invalid_argument);
}

TEST_CASE("explicit-field fermat numerator") {
  CHECK(fermat_numerator(build_field(2, 3), 7).b == fermat7_f8);
  NumeratorPoly big = fermat_numerator(build_field(2, 6), 7);
  CHECK(big.b.size() == 31);
  CHECK(functional_equation_holds(big));
  CHECK(rh_max_residual(big) < 1e-9);
}

TEST_CASE("klein orbit factor divides the fermat numerator over F_8") {
  const std::vector<BigInt> orbit = {1, 15, 99, 365, 792, 960, 512};
  auto quotient = poly_divide_exact(fermat7_f8, orbit);
  CHECK(quotient.size() == 25);
  // and the orbit factor itself is (1 + 5T + 8T^2)^3
  auto once = poly_divide_exact(orbit, {1, 5, 8});
  auto twice = poly_divide_exact(once, {1, 5, 8});
  CHECK(poly_divide_exact(twice, {1, 5, 8}) == std::vector<BigInt>{1});
  CHECK_THROWS_AS((void)poly_divide_exact({1, 1}, {1, 2}), integrity_error);
}

TEST_CASE("structural even-order jacobi values") {
  CHECK(klein_even_case_jacobi_check(13));
  CHECK(klein_even_case_jacobi_check(3));
  CHECK(klein_even_case_jacobi_check(5));
}

TEST_CASE("binomials and multinomials mod p") {
  CHECK(binomial_mod_p(10, 3, 7) == 1);    // 120
  CHECK(binomial_mod_p(13, 3, 7) == 6);    // 286
  CHECK(binomial_mod_p(7, 3, 7) == 0);     // carry in base 7
  CHECK(binomial_mod_p(3, 5, 7) == 0);
  CHECK(multinomial_mod_p(6, 1, 2, 3, 7) == 4);   // 60
  CHECK(multinomial_mod_p(7, 1, 2, 4, 2) == 1);   // 105
  CHECK(multinomial_mod_p(7, 1, 2, 4, 11) == 6);  // 105
}

TEST_CASE("count congruences") {
  Field F8 = build_field(2, 3);
  CHECK(trinomial_congruence_check(F8, 24).pass);
  CHECK_FALSE(trinomial_congruence_check(F8, 25).pass);
  Field F3 = build_field(3, 1);
  CHECK(trinomial_congruence_check(F3, 4).pass);
  Field F29 = build_field(29, 1);
  CHECK(trinomial_congruence_check(F29, 24).pass);
  CHECK_THROWS_AS((void)trinomial_congruence_check(build_field(7, 1), 8),
                  std::invalid_argument);

  auto hw = hudson_williams_check(29);
  CHECK(hw.pass);
  CHECK(hw.lhs == 2);  // C(12,4) = 495 = 2 mod 29
  CHECK(hudson_williams_check(43).pass);
  CHECK(hudson_williams_check(71).pass);
  CHECK(hudson_williams_check(113).pass);
}

}  // TEST_SUITE
