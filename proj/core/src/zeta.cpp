#include "kleinzeta/zeta.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "kleinzeta/errors.hpp"

namespace kleinzeta {
namespace {

BigInt bigint_pow(const BigInt& base, unsigned e) {
  BigInt out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

// Z[T] helpers; zero is the empty vector.
void trim_poly(std::vector<BigInt>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& a) {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(BigInt(i) * a[i]);
  trim_poly(out);
  return out;
}

BigInt poly_content(const std::vector<BigInt>& a) {
  BigInt g = 0;
  for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
  return g;
}

// Primitive part with positive leading coefficient.
std::vector<BigInt> poly_primitive(std::vector<BigInt> a) {
  trim_poly(a);
  if (a.empty()) return a;
  BigInt g = poly_content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

std::vector<BigInt> pseudo_rem(std::vector<BigInt> A, const std::vector<BigInt>& B) {
  trim_poly(A);
  const BigInt& lb = B.back();
  while (A.size() >= B.size()) {
    BigInt la = A.back();
    std::size_t shift = A.size() - B.size();
    for (auto& c : A) c *= lb;
    for (std::size_t i = 0; i < B.size(); ++i) A[shift + i] -= la * B[i];
    trim_poly(A);
  }
  return A;
}

std::vector<BigInt> poly_gcd_primitive(std::vector<BigInt> A, std::vector<BigInt> B) {
  A = poly_primitive(std::move(A));
  B = poly_primitive(std::move(B));
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    std::vector<BigInt> R = poly_primitive(pseudo_rem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  return A;
}

}  // namespace

std::vector<BigInt> poly_divide_exact(const std::vector<BigInt>& num,
                                      const std::vector<BigInt>& den) {
  if (den.empty() || den.back() == 0)
    throw std::invalid_argument("division by zero polynomial");
  if (num.size() < den.size()) throw integrity_error("non-exact polynomial division");
  std::vector<BigInt> rem = num;
  std::vector<BigInt> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = rem[i + den.size() - 1];
    if (c == 0) continue;
    if (c % den.back() != 0) throw integrity_error("non-exact polynomial division");
    quot[i] = c / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= quot[i] * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw integrity_error("non-exact polynomial division");
  return quot;
}

std::vector<BigInt> power_sums_from_counts(std::uint64_t q,
                                           const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> s;
  BigInt qr = 1;
  for (std::uint64_t n : counts) {
    qr *= q;
    s.push_back(qr + 1 - BigInt(n));
  }
  return s;
}

NumeratorPoly numerator_from_power_sums(std::uint64_t q, unsigned genus,
                                        const std::vector<BigInt>& s) {
  unsigned d = 2 * genus;
  if (s.size() < d) throw std::invalid_argument("need 2*genus power sums");
  std::vector<BigInt> e(d + 1);
  e[0] = 1;
  for (unsigned k = 1; k <= d; ++k) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= k; ++i) {
      BigInt term = e[k - i] * s[i - 1];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0)
      throw integrity_error("counts are inconsistent with an integral numerator");
    e[k] = acc / k;
  }
  NumeratorPoly P;
  P.q = q;
  P.genus = genus;
  P.b.resize(d + 1);
  for (unsigned k = 0; k <= d; ++k) P.b[k] = (k % 2 == 1) ? -e[k] : e[k];
  return P;
}

std::vector<BigInt> counts_from_numerator(const NumeratorPoly& P, unsigned k) {
  unsigned d = 2 * P.genus;
  std::vector<BigInt> e(d + 1);
  for (unsigned i = 0; i <= d; ++i) e[i] = (i % 2 == 1) ? -P.b[i] : P.b[i];
  std::vector<BigInt> p(k + 1);
  for (unsigned m = 1; m <= k; ++m) {
    BigInt acc = 0;
    unsigned top = std::min(m - 1, d);
    for (unsigned i = 1; i <= top; ++i) {
      BigInt term = e[i] * p[m - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (m <= d) {
      BigInt term = BigInt(m) * e[m];
      acc += (m % 2 == 1) ? term : -term;
    }
    p[m] = acc;
  }
  std::vector<BigInt> counts;
  BigInt qr = 1;
  for (unsigned m = 1; m <= k; ++m) {
    qr *= P.q;
    counts.push_back(qr + 1 - p[m]);
  }
  return counts;
}

bool functional_equation_holds(const NumeratorPoly& P) {
  unsigned d = 2 * P.genus;
  if (P.b.size() != d + 1 || P.b[0] != 1) return false;
  for (unsigned k = 0; k <= P.genus; ++k)
    if (P.b[d - k] != bigint_pow(P.q, P.genus - k) * P.b[k]) return false;
  return true;
}

double rh_max_residual(const NumeratorPoly& P) {
  std::vector<BigInt> A = P.b;
  trim_poly(A);
  if (A.size() <= 1) return 0.0;
  std::vector<BigInt> G = poly_gcd_primitive(A, poly_derivative(A));
  std::vector<BigInt> Q = G.size() > 1 ? poly_divide_exact(A, G) : A;
  std::size_t d = Q.size() - 1;
  if (d == 0) return 0.0;

  // Substitute T = S / sqrt(q) so roots should land on the unit circle.
  std::vector<std::complex<double>> c(d + 1);
  double sq = std::sqrt(double(P.q));
  for (std::size_t k = 0; k <= d; ++k)
    c[k] = Q[k].convert_to<double>() * std::pow(sq, -double(k));
  std::complex<double> lead = c[d];
  for (std::size_t k = 0; k <= d; ++k) c[k] /= lead;

  std::vector<std::complex<double>> w(d);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    acc *= seed;
    w[j] = acc;
  }
  for (int iter = 0; iter < 200; ++iter) {
    double delta = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      std::complex<double> num(0.0, 0.0);
      for (std::size_t k = d + 1; k-- > 0;) num = num * w[j] + c[k];
      std::complex<double> den(1.0, 0.0);
      for (std::size_t l = 0; l < d; ++l)
        if (l != j) den *= (w[j] - w[l]);
      std::complex<double> step = num / den;
      w[j] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  double worst = 0.0;
  for (const auto& root : w) worst = std::max(worst, std::abs(std::abs(root) - 1.0));
  return worst;
}

namespace {

// (1 + a T^s + q^s T^{2s})^e expanded into degree-6 coefficients.
std::vector<BigInt> quadratic_power(const BigInt& a, const BigInt& qs, unsigned s,
                                    unsigned e) {
  std::vector<BigInt> acc{1};
  std::vector<BigInt> base(2 * s + 1);
  base[0] = 1;
  base[s] = a;
  base[2 * s] = qs;
  for (unsigned i = 0; i < e; ++i) {
    std::vector<BigInt> next(acc.size() + base.size() - 1);
    for (std::size_t j = 0; j < acc.size(); ++j)
      for (std::size_t k = 0; k < base.size(); ++k) next[j + k] += acc[j] * base[k];
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

ZetaFunction zeta_klein(std::uint32_t p, const Budgets& budgets) {
  if (p == 7) throw std::invalid_argument("Klein quartic has bad reduction at 7");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  unsigned r = order_mod(p, 7);
  ZetaFunction z;
  z.p = p;
  z.r = 1;
  z.numerator.q = p;
  z.numerator.genus = 3;
  switch (r) {
    case 1: {
      Field F = build_field(p, 1, budgets.field);
      Character chi = character_of_order(F, 7);
      QuadInt7 J = to_quad7(jacobi_sum(chi, chi.power(2)));
      z.numerator.b = quadratic_power(J.trace(), BigInt(p), 1, 3);
      break;
    }
    case 3: {
      Field F = build_field(p, 3, budgets.field);
      Character chi = character_of_order(F, 7);
      QuadInt7 J = to_quad7(jacobi_sum(chi, chi.power(2)));
      z.numerator.b = quadratic_power(J.trace(), bigint_pow(p, 3), 3, 1);
      break;
    }
    case 2:
      // (1 + p T^2)^3
      z.numerator.b = quadratic_power(BigInt(0), BigInt(p), 1, 3);
      break;
    case 6: {
      std::vector<BigInt> b(7);
      b[0] = 1;
      b[6] = bigint_pow(p, 3);
      z.numerator.b = std::move(b);
      break;
    }
    default:
      throw std::logic_error("impossible order mod 7");
  }
  return z;
}

NumeratorPoly fermat_numerator(const Field& F, unsigned n) {
  if ((F.q() - 1) % n != 0)
    throw std::invalid_argument("fermat numerator needs n | q-1");
  Character chi = character_of_order(F, n);
  std::vector<CyclotomicInt> acc{CyclotomicInt::from_int(n, 1)};
  for (unsigned i = 1; i < n; ++i)
    for (unsigned j = 1; j < n; ++j) {
      if (i + j == n) continue;
      CyclotomicInt J = jacobi_sum(chi.power(i), chi.power(j)).promoted(n);
      acc.push_back(CyclotomicInt(n));
      for (std::size_t k = acc.size() - 1; k-- > 0;) {
        CyclotomicInt t = acc[k] * J;
        acc[k + 1] += t;
      }
    }
  NumeratorPoly P;
  P.q = F.q();
  P.genus = (n - 1) * (n - 2) / 2;
  P.b.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) P.b[k] = acc[k].rational_value();
  if (P.b.size() != 2 * P.genus + 1)
    throw integrity_error("fermat numerator has unexpected degree");
  return P;
}

ZetaFunction zeta_fermat(std::uint32_t p, unsigned n, const Budgets& budgets) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n == 0) throw std::invalid_argument("fermat exponent must be positive");
  unsigned r = 1;
  if (n > 1) {
    if (p % n == 0 || std::gcd<std::uint64_t>(p, n) != 1)
      throw std::invalid_argument("fermat curve needs gcd(p, n) = 1");
    r = order_mod(p, n);
  }
  Field F = build_field(p, r, budgets.field);
  ZetaFunction z;
  z.p = p;
  z.r = r;
  z.numerator = n > 1 ? fermat_numerator(F, n) : NumeratorPoly{F.q(), 0, {BigInt(1)}};
  return z;
}

bool klein_even_case_jacobi_check(std::uint32_t p, const Budgets& budgets) {
  unsigned r = order_mod(p, 7);
  if (r != 2 && r != 6)
    throw std::invalid_argument("structural check applies to even order only");
  Field F = build_field(p, r, budgets.field);
  Character chi = character_of_order(F, 7);
  CyclotomicInt J = jacobi_sum(chi, chi.power(2));
  return J.is_rational() && J.rational_value() == bigint_pow(p, r / 2);
}

std::uint32_t binomial_mod_p(const BigInt& n, const BigInt& k, std::uint32_t p) {
  if (k < 0 || k > n) return 0;
  return multinomial_mod_p(n, k, n - k, BigInt(0), p);
}

std::uint32_t multinomial_mod_p(const BigInt& n, const BigInt& a, const BigInt& b,
                                const BigInt& c, std::uint32_t p) {
  if (a < 0 || b < 0 || c < 0 || a + b + c != n)
    throw std::invalid_argument("multinomial arguments must be nonnegative and sum to n");
  // factorials mod p for one base-p digit block
  std::vector<std::uint64_t> fact(p);
  fact[0] = 1;
  for (std::uint32_t i = 1; i < p; ++i) fact[i] = fact[i - 1] * i % p;
  auto inv_pow = [&](std::uint64_t x, std::uint64_t e) {
    std::uint64_t out = 1;
    while (e) {
      if (e & 1) out = out * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return out;
  };
  BigInt N = n, A = a, B = b, C = c;
  std::uint64_t result = 1;
  while (N > 0) {
    std::uint32_t nd = std::uint32_t(N % p), ad = std::uint32_t(A % p),
                  bd = std::uint32_t(B % p), cd = std::uint32_t(C % p);
    if (std::uint64_t(ad) + bd + cd != nd) return 0;  // a carry kills the residue
    std::uint64_t digit = fact[nd] * inv_pow(fact[ad] * fact[bd] % p * fact[cd] % p, p - 2) % p;
    result = result * digit % p;
    N /= p;
    A /= p;
    B /= p;
    C /= p;
  }
  return std::uint32_t(result);
}

CongruenceCheck trinomial_congruence_check(const Field& F, std::uint64_t count) {
  std::uint32_t p = F.p(), q = F.q();
  if (p == 7) throw std::invalid_argument("needs p != 7");
  std::uint32_t rhs = 1 % p;
  if ((q - 1) % 7 == 0) {
    BigInt m = BigInt(q - 1) / 7;
    std::uint32_t c = multinomial_mod_p(BigInt(q) - 1, m, 2 * m, 4 * m, p);
    rhs = std::uint32_t(((1 - 3 * std::int64_t(c)) % p + p) % p);
  }
  std::uint32_t lhs = std::uint32_t(count % p);
  return {p, lhs, rhs, lhs == rhs};
}

CongruenceCheck hudson_williams_check(std::uint32_t p) {
  if (p % 7 != 1) throw std::invalid_argument("needs p = 1 mod 7");
  Field F = build_field(p, 1);
  Character chi = character_of_order(F, 7);
  QuadInt7 J = to_quad7(jacobi_sum(chi, chi.power(2)));
  BigInt m = BigInt(p - 1) / 7;
  std::uint32_t lhs = binomial_mod_p(3 * m, m, p);
  BigInt rhs_big = ((-J.trace()) % p + p) % p;
  std::uint32_t rhs = rhs_big.convert_to<std::uint32_t>();
  return {p, lhs, rhs, lhs == rhs};
}

}
