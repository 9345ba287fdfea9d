#pragma once

#include <cstdint>
#include <vector>

#include "kleinzeta/bigint.hpp"
#include "kleinzeta/curves.hpp"

namespace kleinzeta {

// Zeta numerator P(T) = prod (1 - alpha_i T) of a genus-g curve over F_q,
// stored as exact coefficients b_0..b_{2g} with b_0 = 1.
struct NumeratorPoly {
  std::uint64_t q = 0;
  unsigned genus = 0;
  std::vector<BigInt> b;
};

// s_r = q^r + 1 - N_r for r = 1..counts.size().
std::vector<BigInt> power_sums_from_counts(std::uint64_t q,
                                           const std::vector<std::uint64_t>& counts);

// Newton's identities; needs s_1..s_{2g}.  Throws integrity_error if the
// counts are not consistent with an integral numerator.
NumeratorPoly numerator_from_power_sums(std::uint64_t q, unsigned genus,
                                        const std::vector<BigInt>& s);

// N_1..N_k recovered exactly from the numerator.
std::vector<BigInt> counts_from_numerator(const NumeratorPoly& P, unsigned k);

// b_{2g-k} = q^{g-k} b_k for all k.
bool functional_equation_holds(const NumeratorPoly& P);

// Max over inverse roots alpha of | |alpha|/sqrt(q) - 1 |, computed on the
// exact squarefree part of P scaled to put roots on the unit circle.
double rh_max_residual(const NumeratorPoly& P);

struct ZetaFunction {
  std::uint32_t p = 0;
  unsigned r = 0;  // field degree: numerator is over F_{p^r}
  NumeratorPoly numerator;
};

// Klein quartic over F_p, p != 7.  Case split on the order of p mod 7:
// order 1 uses (1 + J T)^3 (1 + conj(J) T)^3, order 3 uses
// (1 + J T^3)(1 + conj(J) T^3) with J over F_{p^3}, order 2 gives
// (1 + p T^2)^3 and order 6 gives 1 + p^3 T^6.
ZetaFunction zeta_klein(std::uint32_t p, const Budgets& b = {});

// Fermat curve of exponent n over F_q, q = p^{ord(p mod n)}: the product of
// (1 + J(chi^i, chi^j) T) over i,j in [1, n-1] with i + j != n.
// Requires gcd(p, n) = 1.
ZetaFunction zeta_fermat(std::uint32_t p, unsigned n, const Budgets& b = {});

// Same numerator over an explicitly chosen base field; requires n | q-1.
NumeratorPoly fermat_numerator(const Field& F, unsigned n);

// Exact division in Z[T]; throws integrity_error when not divisible.
std::vector<BigInt> poly_divide_exact(const std::vector<BigInt>& num,
                                      const std::vector<BigInt>& den);

// For p with ord(p mod 7) in {2, 6} and p^r <= budget: J(chi, chi^2) over
// F_{p^r} equals p^{r/2} exactly, the value the structural forms assume.
bool klein_even_case_jacobi_check(std::uint32_t p, const Budgets& b = {});

// Lucas-style binomials and multinomials mod p.
std::uint32_t binomial_mod_p(const BigInt& n, const BigInt& k, std::uint32_t p);
std::uint32_t multinomial_mod_p(const BigInt& n, const BigInt& a, const BigInt& b,
                                const BigInt& c, std::uint32_t p);

struct CongruenceCheck {
  std::uint32_t modulus = 0;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  bool pass = false;
};

// Klein count mod p: N = 1 - 3 * multinomial(q-1; m, 2m, 4m) with m = (q-1)/7
// when 7 | q-1, and N = 1 otherwise.  Requires p != 7.
CongruenceCheck trinomial_congruence_check(const Field& F, std::uint64_t count);

// binom(3m, m) = -(J + conj(J)) mod p for p = 7m + 1.
CongruenceCheck hudson_williams_check(std::uint32_t p);

}
