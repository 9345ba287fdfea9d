#pragma once

#include <complex>
#include <vector>

#include "kleinzeta/character.hpp"

namespace kleinzeta {

// g(chi) = sum over all x of chi(x) * zeta_p^{trace(x)}, evaluated numerically.
// With the trivial-character convention eps_0(0) = 1 this gives g(eps_0) = 0
// and |g(chi)| = sqrt(q) for nontrivial chi.
std::complex<double> gauss_sum(const Character& chi);

// J(chi1, chi2) = sum over all x of chi1(x) chi2(1-x), exact in Z[zeta_N],
// N = lcm of the two exact orders.  Convention values at 0 make
// J(eps0, eps0) = q, J(eps0, chi) = 0 and J(chi, chi^{-1}) = -chi(-1).
CyclotomicInt jacobi_sum(const Character& chi1, const Character& chi2);

// J(chi_1,...,chi_k) = sum over x_1+...+x_k = 1 of prod chi_i(x_i); k <= 3.
CyclotomicInt jacobi_multi(const std::vector<Character>& chis);

struct RelationCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_error;
  bool pass;
};

// g(chi1) g(chi2) = J(chi1, chi2) g(chi1 chi2), checked numerically.
// Requires chi1, chi2 and chi1*chi2 nontrivial.
RelationCheck gauss_jacobi_relation_check(const Character& chi1,
                                          const Character& chi2,
                                          double tol = 1e-6);

struct HasseDavenportReport {
  CyclotomicInt lifted;      // -J over the extension for the lifted pair
  CyclotomicInt base_power;  // (-J over the base)^[big:small]
  bool exact_match;
  bool pass;
};

// Exact Jacobi-sum form of Hasse-Davenport: lifting chi1, chi2 along the norm
// to `big` satisfies -J'(chi1', chi2') = (-J(chi1, chi2))^r.
HasseDavenportReport hasse_davenport_check(const Character& chi1,
                                           const Character& chi2,
                                           const Field& big);
// Shorthand for the pair (chi, chi).
HasseDavenportReport hasse_davenport_check(const Character& chi, const Field& big);
// Same, building the degree-r extension internally.
HasseDavenportReport hasse_davenport_check(const Character& chi, unsigned r);

struct GaussLiftCheck {
  std::complex<double> lifted;
  std::complex<double> predicted;  // -(-g(chi))^r
  double abs_error;
  bool pass;
};

// Numeric Gauss-sum form: g'(chi') = -(-g(chi))^r.
GaussLiftCheck hasse_davenport_gauss_check(const Character& chi, const Field& big,
                                           double tol = 1e-6);

}
