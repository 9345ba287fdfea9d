#include "kleinzeta/character.hpp"

#include <numeric>
#include <stdexcept>

#include "kleinzeta/errors.hpp"

namespace kleinzeta {
namespace {

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1, r = std::int64_t(m), nr = std::int64_t(a % m);
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::int64_t t2 = t - qt * nt, r2 = r - qt * nr;
    t = nt;
    nt = t2;
    r = nr;
    nr = r2;
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  return std::uint64_t(t < 0 ? t + std::int64_t(m) : t);
}

}  // namespace

Character::Character(Field F, std::uint64_t index) : F_(std::move(F)) {
  std::uint64_t m = F_.q() - 1;
  index_ = m == 0 ? 0 : index % m;
  if (m == 0) m = 1;  // q = 2: only the trivial character
  std::uint64_t g = std::gcd(index_, m);
  if (g == 0) g = m;
  order_ = unsigned(m / g);
  step_ = index_ / g;
}

CyclotomicInt Character::operator()(Elem x) const {
  if (x == 0)
    return is_trivial() ? CyclotomicInt::from_int(1, 1) : CyclotomicInt(order_);
  return CyclotomicInt::zeta_power(order_, exponent(x));
}

unsigned Character::exponent(Elem x) const {
  if (x == 0) throw std::domain_error("character exponent at zero");
  return unsigned(step_ * F_.log(x) % order_);
}

Character Character::power(std::uint64_t m) const {
  std::uint64_t mod = F_.q() - 1;
  if (mod == 0) return *this;
  return Character(F_, index_ * (m % mod) % mod);
}

Character Character::inverse() const {
  std::uint64_t mod = F_.q() - 1;
  if (mod == 0 || index_ == 0) return *this;
  return Character(F_, mod - index_);
}

Character make_character(const Field& F, std::uint64_t index) { return Character(F, index); }

Character trivial_character(const Field& F) { return Character(F, 0); }

Character character_of_order(const Field& F, unsigned n, std::uint64_t i) {
  std::uint32_t m = F.q() - 1;
  if (n == 0 || m % n != 0)
    throw std::invalid_argument("requested order does not divide q-1");
  return Character(F, std::uint64_t(m / n) * (i % n));
}

Character lift_character(const Character& chi, const Field& big) {
  const Field& small = chi.field();
  if (big.p() != small.p() || big.r() % small.r() != 0)
    throw std::invalid_argument("target is not an extension of the character's field");
  if (big.r() == small.r()) return Character(big, chi.index());

  std::uint64_t q = small.q(), Q = big.q();
  std::uint64_t nu = (Q - 1) / (q - 1);

  // Embed via the first packed root of the small modulus in the big field.
  Elem eg;
  if (small.r() == 1) {
    eg = small.generator();  // constants embed as themselves
  } else {
    const auto& f = small.modulus();
    Elem rho = 0;
    bool found = false;
    for (std::uint64_t cand = 0; cand < Q; ++cand) {
      Elem acc = 0;
      for (std::size_t i = f.size(); i-- > 0;)
        acc = big.add(big.mul(acc, Elem(cand)), big.from_int(f[i]));
      if (acc == 0) {
        rho = Elem(cand);
        found = true;
        break;
      }
    }
    if (!found) throw integrity_error("modulus has no root in the extension");
    auto digs = small.digits(small.generator());
    Elem acc = 0;
    for (std::size_t i = digs.size(); i-- > 0;)
      acc = big.add(big.mul(acc, rho), big.from_int(digs[i]));
    eg = acc;
  }

  std::uint64_t L = big.log(eg);
  if (L % nu != 0) throw integrity_error("embedded generator has wrong norm order");
  std::uint64_t u = L / nu;
  std::uint64_t m = inv_mod_u64(u, q - 1);
  std::uint64_t lifted = nu * (chi.index() * m % (q - 1));
  return Character(big, lifted);
}

Character lift_character(const Character& chi, unsigned r) {
  if (r == 0) throw std::invalid_argument("extension degree must be positive");
  const Field& small = chi.field();
  if (r == 1) return chi;
  Field big = build_field(small.p(), small.r() * r);
  return lift_character(chi, big);
}

CyclotomicInt additive_character(const Field& F, Elem x) {
  return CyclotomicInt::zeta_power(F.p(), F.trace(x));
}

}
