#include "kleinzeta/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kleinzeta/errors.hpp"

namespace kleinzeta {
namespace {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t(a[i]) * b[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = std::uint32_t(acc[i] % p);
  trim(out);
  return out;
}

// Remainder mod monic f.
Poly poly_rem(Poly a, const Poly& f, std::uint32_t p) {
  std::size_t df = f.size() - 1;
  while (a.size() > df) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - df;
    if (lead != 0)
      for (std::size_t i = 0; i < df; ++i)
        a[shift + i] = std::uint32_t((a[shift + i] + std::uint64_t(p) -
                                      std::uint64_t(lead) * f[i] % p) % p);
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = std::uint32_t((a[i] + std::uint64_t(p) - b[i]) % p);
  trim(a);
  return a;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0 mod p
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    std::int64_t t2 = t - qt * nt, r2 = r - qt * nr;
    t = nt;
    nt = t2;
    r = nr;
    nr = r2;
  }
  return std::uint32_t(t < 0 ? t + p : t);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    // reduce a mod b after making b monic
    std::uint32_t li = inv_mod(b.back(), p);
    Poly bm(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      bm[i] = std::uint32_t(std::uint64_t(b[i]) * li % p);
    a = poly_rem(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_rem(poly_mul(result, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// f monic of degree r >= 2: no irreducible factor of degree <= r/2 implies
// irreducible, tested with gcd(f, x^{p^k} - x) = 1 for k = 1..r/2.
bool is_irreducible(const Poly& f, std::uint32_t p, unsigned r) {
  Poly t{0, 1};  // x
  for (unsigned k = 1; k <= r / 2; ++k) {
    t = poly_powmod(std::move(t), p, f, p);
    Poly g = poly_gcd(f, poly_sub(t, Poly{0, 1}, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Elem pack(const Poly& a, std::uint32_t p) {
  Elem out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
  return out;
}

Poly unpack(Elem a, std::uint32_t p, unsigned r) {
  Poly out;
  out.reserve(r);
  while (a > 0) {
    out.push_back(a % p);
    a /= p;
  }
  return out;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(std::uint32_t(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(std::uint32_t(n));
  return out;
}

}  // namespace

Field build_field(std::uint32_t p, unsigned r, std::uint32_t max_q) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (r == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < r; ++i) {
    q64 *= p;
    if (q64 > max_q)
      throw budget_error("field size " + std::to_string(p) + "^" + std::to_string(r) +
                         " exceeds budget " + std::to_string(max_q));
  }
  std::uint32_t q = std::uint32_t(q64);

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->r = r;
  data->q = q;

  if (r == 1) {
    data->modulus = {0, 1};
  } else {
    Poly f(r + 1, 0);
    f[r] = 1;
    bool found = false;
    for (Elem m = 0; m < q; ++m) {
      if (m % p == 0) continue;  // constant term 0 is divisible by x
      Poly low = unpack(m, p, r);
      for (unsigned i = 0; i < r; ++i) f[i] = i < low.size() ? low[i] : 0;
      if (is_irreducible(f, p, r)) {
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");
    data->modulus = f;
  }

  const Poly& f = data->modulus;
  auto mul_elems = [&](Elem a, Elem b) {
    return pack(poly_rem(poly_mul(unpack(a, p, r), unpack(b, p, r), p), f, p), p);
  };
  auto pow_elem = [&](Elem a, std::uint64_t e) {
    return pack(poly_powmod(unpack(a, p, r), e, f, p), p);
  };

  auto factors = prime_factors(q - 1);
  Elem gen = 0;
  for (Elem cand = 2; cand < q; ++cand) {
    bool ok = true;
    for (std::uint32_t ell : factors)
      if (pow_elem(cand, (q - 1) / ell) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && q > 2) throw std::logic_error("no generator found");
  if (q == 2) gen = 1;
  data->generator = gen;

  data->exp_.resize(q - 1);
  data->log_.assign(q, q - 1);
  Elem cur = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    data->exp_[k] = cur;
    data->log_[cur] = k;
    cur = mul_elems(cur, gen);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");

  return Field(std::move(data));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const auto& D = *d_;
  std::uint32_t k = D.log_[a];
  return D.exp_[k == 0 ? 0 : D.q - 1 - k];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
  if (a == 0) return n == 0 ? 1 : 0;
  const auto& D = *d_;
  std::uint64_t k = std::uint64_t(D.log_[a]) * (n % (D.q - 1));
  return D.exp_[k % (D.q - 1)];
}

std::uint32_t Field::trace(Elem a) const {
  if (a == 0) return 0;
  const auto& D = *d_;
  std::uint64_t t = D.log_[a];
  Elem acc = 0;
  std::uint64_t tk = t;
  for (unsigned k = 0; k < D.r; ++k) {
    acc = add(acc, D.exp_[tk]);
    tk = tk * D.p % (D.q - 1);
  }
  return acc;  // lies in the prime subfield, i.e. acc < p
}

std::uint32_t Field::norm(Elem a) const {
  if (a == 0) return 0;
  const auto& D = *d_;
  std::uint64_t k = std::uint64_t(D.log_[a]) * ((D.q - 1) / (D.p - 1));
  return D.exp_[k % (D.q - 1)];
}

Elem Field::from_digits(const std::vector<std::uint32_t>& c) const {
  if (c.size() > d_->r) throw std::invalid_argument("too many digits");
  Elem out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= d_->p) throw std::invalid_argument("digit out of range");
    out = out * d_->p + c[i];
  }
  return out;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> out(d_->r, 0);
  for (unsigned i = 0; i < d_->r; ++i) {
    out[i] = a % d_->p;
    a /= d_->p;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<bool> sieve(std::size_t(n) + 1, true);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) sieve[std::size_t(j)] = false;
  }
  return out;
}

std::vector<PrimePower> prime_powers_up_to(std::uint32_t n) {
  std::vector<PrimePower> out;
  if (n < 2) return out;
  for (std::uint32_t p : primes_up_to(n)) {
    std::uint64_t q = p;
    unsigned r = 1;
    while (q <= n) {
      out.push_back({p, r, std::uint32_t(q)});
      q *= p;
      ++r;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

unsigned order_mod(std::uint64_t a, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must exceed 1");
  a %= n;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("order_mod needs gcd(a, n) = 1");
  std::uint64_t x = a % n;
  unsigned k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

}
