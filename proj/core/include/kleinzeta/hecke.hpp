#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/zeta.hpp"

namespace kleinzeta {

// The unique a, b > 0 with 4p = a^2 + 7 b^2, or nullopt when p is inert in
// Q(sqrt(-7)) (p = 3, 5, 6 mod 7).  Throws for p = 7 or p not prime.
std::optional<std::pair<std::int64_t, std::int64_t>> cornacchia_4p(std::uint32_t p);

// Value of the weight-2 Hecke character at (a prime above) p, normalized by
// a = 1, 2 or 4 mod 7 and b > 0 in (a + b sqrt(-7))/2.  Inert p give -p,
// and the bad prime 7 gives 0.
QuadInt7 hecke_char(std::uint32_t p);

// Exponent e(p) with chi_7(p) = omega^{e(p)} for the cubic character mod 7
// pinned by chi_7(3) = omega^2; requires p != 0 mod 7.
unsigned chi7_exponent(std::uint32_t p);

// Hecke eigenvalues of the three conjugate level-49 newforms at p, as
// elements of Z[omega]: a_p(f_j) = omega^{j e(p)} a_0, together with the
// nebentypus values chi_j(p) = omega^{2 j e(p)}.
struct ApTriple {
  std::uint32_t p = 0;
  CyclotomicInt a0;               // common split eigenvalue (0 when inert)
  std::vector<CyclotomicInt> ap;     // j = 0, 1, 2
  std::vector<CyclotomicInt> neben;  // j = 0, 1, 2
  ApTriple() : a0(3) {}
};

ApTriple ap_triple(std::uint32_t p);

// prod_j (1 - a_p(f_j) T + chi_j(p) p T^2), expanded exactly in Z[omega];
// the omega components cancel and the rational degree-6 result is returned.
std::vector<BigInt> euler_product(std::uint32_t p);

struct Theorem1Report {
  std::uint32_t p = 0;
  unsigned frob_order = 0;          // ord(p mod 7)
  std::vector<BigInt> curve_side;   // Klein zeta numerator over F_p
  std::vector<BigInt> modular_side; // product of the three Euler factors
  bool match = false;
};

// Klein zeta numerator vs. the product of newform Euler factors at p != 7.
Theorem1Report verify_theorem1(std::uint32_t p, const Budgets& b = {});

struct JacobiHeckeValue {
  unsigned frob_order = 0;
  QuadInt7 value;  // -J(chi^a, chi^b) over F_{p^r}, r = ord(p mod 7)
};

JacobiHeckeValue jacobi_hecke(std::uint32_t p, unsigned a = 1, unsigned bexp = 2,
                              const Budgets& budgets = {});

// a_p of the weight-2 level-27 newform attached to the n = 3 Fermat curve:
// 0 for p = 2 mod 3, -(J(chi_3, chi_3) + conj) for p = 1 mod 3, 0 at p = 3.
std::int64_t fc3_ap(std::uint32_t p);

}
