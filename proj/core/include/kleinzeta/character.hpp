#pragma once

#include <cstdint>

#include "kleinzeta/cyclotomic.hpp"
#include "kleinzeta/field.hpp"

namespace kleinzeta {

// Multiplicative character of F_q^*: chi(g^t) = zeta_{q-1}^{index*t} for the
// canonical generator g.  Values are produced exactly in Z[zeta_n] where n is
// the exact order of the character.  chi(0) = 0, except eps_0(0) = 1 for the
// trivial character (the convention the point-count formulas assume).
class Character {
 public:
  Character(Field F, std::uint64_t index);

  const Field& field() const { return F_; }
  std::uint32_t modulus_order() const { return F_.q() - 1; }
  std::uint64_t index() const { return index_; }
  unsigned order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  CyclotomicInt operator()(Elem x) const;
  // Exponent t with chi(x) = zeta_order^t; x must be nonzero.
  unsigned exponent(Elem x) const;

  Character power(std::uint64_t m) const;
  Character inverse() const;

 private:
  Field F_;
  std::uint64_t index_;   // in [0, q-1)
  unsigned order_;        // (q-1)/gcd(q-1, index)
  std::uint64_t step_;    // index/gcd: chi(g^t) = zeta_order^{step*t}
};

Character make_character(const Field& F, std::uint64_t index);
Character trivial_character(const Field& F);

// chi with chi(g) = zeta_n^i; requires n | q-1.
Character character_of_order(const Field& F, unsigned n, std::uint64_t i = 1);

// Norm-compatible lift chi' = chi . Norm_{big/small}.  The subfield embedding
// is pinned by sending the small field's x-class to the first packed root of
// the small modulus inside big, so lifts are reproducible across runs.
Character lift_character(const Character& chi, const Field& big);

// Same, building F_{q^r} internally.
Character lift_character(const Character& chi, unsigned r);

// psi(x) = zeta_p^{trace(x)}, exact in Z[zeta_p].
CyclotomicInt additive_character(const Field& F, Elem x);

}
