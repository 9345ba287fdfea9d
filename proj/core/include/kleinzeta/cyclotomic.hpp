#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kleinzeta/bigint.hpp"

namespace kleinzeta {

unsigned euler_phi(unsigned n);

// Coefficients c_0..c_{phi(n)} of the n-th cyclotomic polynomial, monic.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

// Element of Z[zeta_n] on the power basis 1, zeta, ..., zeta^{phi(n)-1},
// always kept reduced mod the n-th cyclotomic polynomial.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(unsigned n);  // zero in Z[zeta_n]
  static CyclotomicInt from_int(unsigned n, BigInt v);
  static CyclotomicInt zeta_power(unsigned n, std::uint64_t k);
  // Coefficients of zeta^0..zeta^{d} for any d; exponents are folded mod n
  // and the result reduced to the power basis.
  static CyclotomicInt from_coeffs(unsigned n, std::vector<BigInt> c);

  unsigned order() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;     // lies in Z
  BigInt rational_value() const;  // requires is_rational()

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  bool operator==(const CyclotomicInt& o) const;
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  CyclotomicInt conj() const;              // complex conjugation, zeta -> zeta^{-1}
  CyclotomicInt promoted(unsigned N) const;  // into Z[zeta_N]; requires n | N

 private:
  unsigned n_;
  std::vector<BigInt> c_;  // size phi(n)
};

// Galois action zeta -> zeta^k; requires gcd(k, n) == 1.
CyclotomicInt galois_apply(const CyclotomicInt& v, unsigned k);

// Numeric embedding zeta -> exp(2*pi*i*j/n).
std::complex<double> embed_complex(const CyclotomicInt& v, unsigned j = 1);

std::string to_string(const CyclotomicInt& v);
std::ostream& operator<<(std::ostream& os, const CyclotomicInt& v);

// (a + b*sqrt(-7))/2 with the half-integer constraint a == b (mod 2).
struct QuadInt7 {
  BigInt a;
  BigInt b;

  QuadInt7() : a(0), b(0) {}
  QuadInt7(BigInt a_, BigInt b_);

  QuadInt7 operator+(const QuadInt7& o) const;
  QuadInt7 operator-(const QuadInt7& o) const;
  QuadInt7 operator*(const QuadInt7& o) const;
  bool operator==(const QuadInt7& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadInt7& o) const { return !(*this == o); }

  QuadInt7 conj() const { return QuadInt7(a, -b); }
  BigInt norm() const;          // (a^2 + 7 b^2)/4
  BigInt trace() const { return a; }
};

std::string to_string(const QuadInt7& v);
std::ostream& operator<<(std::ostream& os, const QuadInt7& v);

// Whether v in Z[zeta_7] is fixed by zeta -> zeta^2, i.e. lies in Z[(1+sqrt(-7))/2].
bool is_sigma2_fixed(const CyclotomicInt& v);

// Conversions between the sigma2-fixed subring of Z[zeta_7] and QuadInt7,
// using sqrt(-7) = 1 + 2*(zeta + zeta^2 + zeta^4).
QuadInt7 to_quad7(const CyclotomicInt& v);
CyclotomicInt from_quad7(const QuadInt7& v);

}
