#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace kleinzeta {

// Packed element code: a_0 + a_1*p + ... + a_{r-1}*p^{r-1} for the residue
// a_0 + a_1*x + ... + a_{r-1}*x^{r-1} mod the field modulus.  Prime fields
// pack the residue itself.  Codes 0..q-1 are exactly the field elements.
using Elem = std::uint32_t;

inline constexpr std::uint32_t max_field_size = 1u << 24;

struct PrimePower {
  std::uint32_t p;
  unsigned r;
  std::uint32_t q;
};

namespace detail {
struct FieldData {
  std::uint32_t p;
  unsigned r;
  std::uint32_t q;
  std::vector<std::uint32_t> modulus;  // c_0..c_r, monic, coefficients mod p
  Elem generator;
  std::vector<Elem> exp_;           // exp_[k] = generator^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[e] for e != 0; log_[0] = q-1 sentinel
};
}

// Value handle over immutable shared tables; cheap to copy.
class Field {
 public:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  std::uint32_t p() const { return d_->p; }
  unsigned r() const { return d_->r; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }
  Elem generator() const { return d_->generator; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    const auto& D = *d_;
    if (D.r == 1) {
      std::uint32_t s = a + b;
      return s >= D.p ? s - D.p : s;
    }
    if (D.p == 2) return a ^ b;
    Elem out = 0;
    std::uint32_t mult = 1;
    for (unsigned i = 0; i < D.r; ++i) {
      std::uint32_t s = a % D.p + b % D.p;
      if (s >= D.p) s -= D.p;
      out += s * mult;
      mult *= D.p;
      a /= D.p;
      b /= D.p;
    }
    return out;
  }

  Elem neg(Elem a) const {
    const auto& D = *d_;
    if (D.r == 1) return a == 0 ? 0 : D.p - a;
    if (D.p == 2) return a;
    Elem out = 0;
    std::uint32_t mult = 1;
    for (unsigned i = 0; i < D.r; ++i) {
      std::uint32_t d = a % D.p;
      out += (d == 0 ? 0 : D.p - d) * mult;
      mult *= D.p;
      a /= D.p;
    }
    return out;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto& D = *d_;
    std::uint64_t k = std::uint64_t(D.log_[a]) + D.log_[b];
    std::uint32_t m = D.q - 1;
    if (k >= m) k -= m;
    return D.exp_[k];
  }

  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t n) const;

  // Discrete log base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const { return d_->log_[a]; }
  Elem exp(std::uint64_t k) const { return d_->exp_[k % (d_->q - 1)]; }

  std::uint32_t trace(Elem a) const;  // to the prime field, value in [0, p)
  std::uint32_t norm(Elem a) const;   // to the prime field, value in [0, p)

  Elem from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(d_->p);
    if (m < 0) m += d_->p;
    return Elem(m);
  }
  Elem from_digits(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> digits(Elem a) const;

  bool same_field(const Field& other) const {
    return d_->p == other.d_->p && d_->r == other.d_->r;
  }

  // Raw tables for hot counting loops.
  const std::vector<Elem>& exp_table() const { return d_->exp_; }
  const std::vector<std::uint32_t>& log_table() const { return d_->log_; }

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

// Deterministic construction: modulus is the first monic irreducible of
// degree r in packed-code order, generator the first element of order q-1.
// Throws budget_error if p^r exceeds max_q and std::invalid_argument on bad p.
Field build_field(std::uint32_t p, unsigned r, std::uint32_t max_q = max_field_size);

bool is_prime(std::uint64_t n);
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);
std::vector<PrimePower> prime_powers_up_to(std::uint32_t n);  // q ascending, q >= 2

// Multiplicative order of a mod n; requires gcd(a, n) == 1.
unsigned order_mod(std::uint64_t a, std::uint64_t n);

}
