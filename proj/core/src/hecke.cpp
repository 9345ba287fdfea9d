#include "kleinzeta/hecke.hpp"

#include <cmath>
#include <stdexcept>

#include "kleinzeta/charsums.hpp"
#include "kleinzeta/errors.hpp"

namespace kleinzeta {

std::optional<std::pair<std::int64_t, std::int64_t>> cornacchia_4p(std::uint32_t p) {
  if (p == 7) throw std::invalid_argument("7 is the ramified prime");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  std::uint32_t res = p % 7;
  if (res == 3 || res == 5 || res == 6) return std::nullopt;
  std::uint64_t target = 4ull * p;
  for (std::int64_t b = 1; 7ull * b * b <= target; ++b) {
    std::uint64_t rest = target - 7ull * b * b;
    std::int64_t a = std::int64_t(std::sqrt(double(rest)));
    while (std::uint64_t(a) * a > rest) --a;
    while (std::uint64_t(a + 1) * (a + 1) <= rest) ++a;
    if (a > 0 && std::uint64_t(a) * a == rest) return std::make_pair(a, b);
  }
  throw integrity_error("no representation 4p = a^2 + 7b^2 found");
}

QuadInt7 hecke_char(std::uint32_t p) {
  if (p == 7) return QuadInt7(0, 0);
  auto ab = cornacchia_4p(p);
  if (!ab) return QuadInt7(-2 * BigInt(p), 0);
  auto [a, b] = *ab;
  // pick the sign of a with a = 1, 2 or 4 mod 7
  std::int64_t am = a % 7;
  if (!(am == 1 || am == 2 || am == 4)) a = -a;
  return QuadInt7(a, b);
}

unsigned chi7_exponent(std::uint32_t p) {
  static const unsigned table[7] = {0, 0, 1, 2, 2, 1, 0};
  unsigned res = p % 7;
  if (res == 0) throw std::invalid_argument("exponent undefined at multiples of 7");
  return table[res];
}

ApTriple ap_triple(std::uint32_t p) {
  ApTriple t;
  t.p = p;
  t.a0 = CyclotomicInt(3);
  if (p == 7) {
    for (unsigned j = 0; j < 3; ++j) {
      t.ap.push_back(CyclotomicInt(3));
      t.neben.push_back(CyclotomicInt(3));
    }
    return t;
  }
  QuadInt7 h = hecke_char(p);
  std::uint32_t res = p % 7;
  bool split = (res == 1 || res == 2 || res == 4);
  if (split) t.a0 = CyclotomicInt::from_int(3, h.trace());
  unsigned e = chi7_exponent(p);
  for (unsigned j = 0; j < 3; ++j) {
    t.ap.push_back(CyclotomicInt::zeta_power(3, j * e) * t.a0);
    t.neben.push_back(CyclotomicInt::zeta_power(3, 2 * j * e));
  }
  return t;
}

std::vector<BigInt> euler_product(std::uint32_t p) {
  if (p == 7) return {BigInt(1)};
  ApTriple t = ap_triple(p);
  std::vector<CyclotomicInt> acc{CyclotomicInt::from_int(3, 1)};
  for (unsigned j = 0; j < 3; ++j) {
    // multiply by 1 - a_p(f_j) T + neben_j p T^2
    std::vector<CyclotomicInt> next(acc.size() + 2, CyclotomicInt(3));
    CyclotomicInt minus_ap = -t.ap[j];
    CyclotomicInt nebp = t.neben[j] * CyclotomicInt::from_int(3, p);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += acc[k];
      next[k + 1] += acc[k] * minus_ap;
      next[k + 2] += acc[k] * nebp;
    }
    acc = std::move(next);
  }
  std::vector<BigInt> out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].rational_value();
  return out;
}

Theorem1Report verify_theorem1(std::uint32_t p, const Budgets& b) {
  if (p == 7) throw std::invalid_argument("p = 7 is the bad prime");
  Theorem1Report rep;
  rep.p = p;
  rep.frob_order = order_mod(p, 7);
  rep.curve_side = zeta_klein(p, b).numerator.b;
  rep.modular_side = euler_product(p);
  rep.match = rep.curve_side == rep.modular_side;
  return rep;
}

JacobiHeckeValue jacobi_hecke(std::uint32_t p, unsigned a, unsigned bexp,
                              const Budgets& budgets) {
  if (p == 7 || !is_prime(p)) throw std::invalid_argument("p must be a prime other than 7");
  unsigned r = order_mod(p, 7);
  Field F = build_field(p, r, budgets.field);
  Character chi = character_of_order(F, 7);
  CyclotomicInt J = jacobi_sum(chi.power(a), chi.power(bexp));
  return {r, to_quad7(-J)};
}

std::int64_t fc3_ap(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 3 || p % 3 == 2) return 0;
  Field F = build_field(p, 1);
  Character chi = character_of_order(F, 3);
  CyclotomicInt J = jacobi_sum(chi, chi);
  BigInt v = -(J + J.conj()).rational_value();
  return v.convert_to<std::int64_t>();
}

}
