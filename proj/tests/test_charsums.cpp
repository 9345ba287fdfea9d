#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "kleinzeta/character.hpp"
#include "kleinzeta/charsums.hpp"
#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/field.hpp"

using namespace kleinzeta;

namespace {

QuadInt7 jq(std::uint32_t p, unsigned r, unsigned i = 1, unsigned j = 2) {
  Field F = build_field(p, r);
  Character chi = character_of_order(F, 7);
  return to_quad7(jacobi_sum(chi.power(i), chi.power(j)));
}

// independent triple-loop evaluation of J(chi1, chi2, chi3)
CyclotomicInt jacobi3_brute(const Character& c1, const Character& c2,
                            const Character& c3) {
  const Field& F = c1.field();
  unsigned N = 1;
  for (const Character* c : {&c1, &c2, &c3}) N = std::lcm(N, c->order());
  CyclotomicInt acc(N);
  for (Elem x = 0; x < F.q(); ++x)
    for (Elem y = 0; y < F.q(); ++y) {
      Elem z = F.sub(F.one(), F.add(x, y));
      acc += c1(x).promoted(N) * c2(y).promoted(N) * c3(z).promoted(N);
    }
  return acc;
}

}  // namespace

TEST_SUITE("charsums") {

TEST_CASE("seventh-power jacobi sum over F_8") {
  Field F = build_field(2, 3);
  Character chi = character_of_order(F, 7);
  CyclotomicInt J = jacobi_sum(chi, chi.power(2));
  CHECK(J.coeffs() == std::vector<BigInt>{2, -1, -1, 0, -1, 0});
  CHECK(to_quad7(J) == QuadInt7(5, -1));
  // the six-term orbit J(chi^i, chi^{2i})
  const QuadInt7 orbit[6] = {{5, -1}, {5, -1}, {5, 1}, {5, -1}, {5, 1}, {5, 1}};
  for (unsigned i = 1; i <= 6; ++i)
    CHECK(to_quad7(jacobi_sum(chi.power(i), chi.power(2 * i))) == orbit[i - 1]);
}

TEST_CASE("quadratic-ring jacobi values across fields") {
  CHECK(jq(29, 1) == QuadInt7(-2, 4));
  CHECK(jq(43, 1) == QuadInt7(12, 2));
  CHECK(jq(71, 1) == QuadInt7(-16, -2));
  CHECK(jq(2, 6) == QuadInt7(-9, -5));
  CHECK(jq(11, 3) == QuadInt7(68, 10));
  CHECK(jq(23, 3) == QuadInt7(40, 82));
  CHECK(jq(13, 2) == QuadInt7(26, 0));
  CHECK(jq(3, 6) == QuadInt7(54, 0));
}

TEST_CASE("cubic jacobi sums") {
  auto j3 = [](std::uint32_t p, unsigned r) {
    Field F = build_field(p, r);
    Character chi = character_of_order(F, 3);
    return jacobi_sum(chi, chi).coeffs();
  };
  CHECK(j3(7, 1) == std::vector<BigInt>{-1, -3});
  CHECK(j3(13, 1) == std::vector<BigInt>{-4, -3});
  CHECK(j3(2, 2) == std::vector<BigInt>{2, 0});
}

TEST_CASE("jacobi conventions at the trivial character") {
  for (auto [p, r] : {std::pair<unsigned, unsigned>{5, 1}, {2, 3}, {3, 2}}) {
    Field F = build_field(p, r);
    Character eps = trivial_character(F);
    CHECK(jacobi_sum(eps, eps).rational_value() == F.q());
    for (std::uint64_t k = 1; k < F.q() - 1; ++k) {
      Character chi = make_character(F, k);
      CHECK(jacobi_sum(eps, chi).is_zero());
      CHECK(jacobi_sum(chi, eps).is_zero());
      CyclotomicInt expect = -chi(F.neg(F.one()));
      CHECK(jacobi_sum(chi, chi.inverse()) == expect);
    }
  }
}

TEST_CASE("jacobi sums match the defining double sum") {
  Field F = build_field(13, 1);
  for (std::uint64_t k1 : {1, 3, 4, 6}) {
    for (std::uint64_t k2 : {2, 3, 9}) {
      Character c1 = make_character(F, k1), c2 = make_character(F, k2);
      unsigned N = std::lcm(c1.order(), c2.order());
      CyclotomicInt acc(N);
      for (Elem x = 0; x < 13; ++x)
        acc += c1(x).promoted(N) * c2(F.sub(F.one(), x)).promoted(N);
      CHECK(jacobi_sum(c1, c2) == acc);
    }
  }
}

TEST_CASE("triple jacobi sums") {
  Field F7 = build_field(7, 1);
  Character eps = trivial_character(F7);
  CHECK(jacobi_multi({eps, eps, eps}).rational_value() == 49);
  Character chi = character_of_order(F7, 3);
  for (auto ks : {std::vector<unsigned>{1, 1, 1}, {1, 2, 1}, {2, 2, 2}}) {
    std::vector<Character> cs;
    for (unsigned k : ks) cs.push_back(chi.power(k));
    CHECK(jacobi_multi(cs) == jacobi3_brute(cs[0], cs[1], cs[2]));
  }
  Field F9 = build_field(3, 2);
  Character psi = character_of_order(F9, 4);
  CHECK(jacobi_multi({psi, psi, psi.power(2)}) ==
        jacobi3_brute(psi, psi, psi.power(2)));
}

TEST_CASE("gauss sum magnitudes") {
  for (auto [p, r] : {std::pair<unsigned, unsigned>{7, 1}, {2, 3}, {3, 2}, {5, 2}}) {
    Field F = build_field(p, r);
    double sq = std::sqrt(double(F.q()));
    CHECK(std::abs(gauss_sum(trivial_character(F))) < 1e-9);
    for (std::uint64_t k = 1; k < F.q() - 1; ++k)
      CHECK(std::abs(std::abs(gauss_sum(make_character(F, k))) - sq) < 1e-9);
  }
}

TEST_CASE("gauss-jacobi relation") {
  Field F = build_field(13, 1);
  Character chi = character_of_order(F, 3);
  Character quad = character_of_order(F, 2);
  auto rel = gauss_jacobi_relation_check(chi, quad);
  CHECK(rel.pass);
  CHECK(rel.abs_error < 1e-9);
  auto rel2 = gauss_jacobi_relation_check(chi, chi);
  CHECK(rel2.pass);
}

TEST_CASE("lifting along extensions preserves minus-jacobi powers") {
  // exact form over the pinned pairs
  for (auto [p, r, ext] : {std::tuple<unsigned, unsigned, unsigned>{3, 1, 2},
                           {2, 2, 2},
                           {2, 3, 2},
                           {2, 3, 3}}) {
    Field small = build_field(p, r);
    for (std::uint64_t k = 1; k < small.q() - 1; ++k) {
      Character chi = make_character(small, k);
      auto rep = hasse_davenport_check(chi, ext);
      CHECK(rep.exact_match);
      CHECK(rep.pass);
    }
  }
  // the chi, chi^2 pair over the cubic extension of F_8
  Field F8 = build_field(2, 3);
  Field F512 = build_field(2, 9);
  Character chi = character_of_order(F8, 7);
  auto rep = hasse_davenport_check(chi, chi.power(2), F512);
  CHECK(rep.exact_match);

  // numeric gauss-sum form
  for (std::uint64_t k = 1; k < 7; ++k) {
    auto g = hasse_davenport_gauss_check(make_character(F8, k), build_field(2, 6));
    CHECK(g.pass);
    CHECK(g.abs_error < 1e-6);
  }
}

TEST_CASE("lifted quadratic gauss sum over F_9 is 3") {
  Field F3 = build_field(3, 1);
  Field F9 = build_field(3, 2);
  Character quad = character_of_order(F3, 2);
  std::complex<double> g = gauss_sum(lift_character(quad, F9));
  CHECK(std::abs(g - std::complex<double>(3.0, 0.0)) < 1e-6);
}

}  // TEST_SUITE
