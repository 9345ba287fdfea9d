#include "kleinzeta/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kleinzeta/errors.hpp"

namespace kleinzeta {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

std::vector<BigInt> polydiv_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  if (den.empty() || den.back() == 0)
    throw std::invalid_argument("division by zero polynomial");
  if (num.size() < den.size()) throw integrity_error("non-exact polynomial division");
  std::vector<BigInt> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1];
    if (c == 0) continue;
    if (c % den.back() != 0) throw integrity_error("non-exact polynomial division");
    quot[i] = c / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= quot[i] * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw integrity_error("non-exact polynomial division");
  return quot;
}

// Remainder mod a monic polynomial; result has fewer coefficients than den.
std::vector<BigInt> polyrem_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  std::size_t d = den.size() - 1;
  while (num.size() > d) {
    BigInt lead = num.back();
    if (lead != 0) {
      std::size_t shift = num.size() - 1 - d;
      for (std::size_t j = 0; j < d; ++j) num[shift + j] -= lead * den[j];
    }
    num.pop_back();
  }
  return num;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned d = 2; std::uint64_t(d) * d <= m; ++d)
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::vector<BigInt>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<BigInt> acc(n + 1, BigInt(0));
  acc[0] = -1;
  acc[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) acc = polydiv_exact(std::move(acc), cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(n, acc);
  return acc;
}

CyclotomicInt::CyclotomicInt(unsigned n) : n_(n), c_(euler_phi(n), BigInt(0)) {
  if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
}

CyclotomicInt CyclotomicInt::from_int(unsigned n, BigInt v) {
  CyclotomicInt out(n);
  out.c_[0] = std::move(v);
  return out;
}

CyclotomicInt CyclotomicInt::zeta_power(unsigned n, std::uint64_t k) {
  std::vector<BigInt> c(std::size_t(k % n) + 1, BigInt(0));
  c.back() = 1;
  return from_coeffs(n, std::move(c));
}

CyclotomicInt CyclotomicInt::from_coeffs(unsigned n, std::vector<BigInt> c) {
  CyclotomicInt out(n);
  std::vector<BigInt> folded(n, BigInt(0));
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % n] += c[i];
  folded = polyrem_monic(std::move(folded), cyclotomic_polynomial(n));
  folded.resize(out.c_.size(), BigInt(0));
  out.c_ = std::move(folded);
  return out;
}

bool CyclotomicInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CyclotomicInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CyclotomicInt::rational_value() const {
  if (!is_rational()) throw integrity_error("cyclotomic value is not rational");
  return c_[0];
}

static void require_same_ring(const CyclotomicInt& a, const CyclotomicInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("cyclotomic operands in different rings");
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  require_same_ring(*this, o);
  CyclotomicInt out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  require_same_ring(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  require_same_ring(*this, o);
  CyclotomicInt out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
  return out;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
  return out;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  require_same_ring(*this, o);
  std::vector<BigInt> conv(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  return from_coeffs(n_, std::move(conv));
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
  return n_ == o.n_ && c_ == o.c_;
}

CyclotomicInt CyclotomicInt::conj() const {
  if (n_ <= 2) return *this;
  return galois_apply(*this, n_ - 1);
}

CyclotomicInt CyclotomicInt::promoted(unsigned N) const {
  if (N % n_ != 0) throw std::invalid_argument("promotion target is not a multiple");
  if (N == n_) return *this;
  unsigned s = N / n_;
  std::vector<BigInt> c(N, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[(i * s) % N] += c_[i];
  return from_coeffs(N, std::move(c));
}

CyclotomicInt galois_apply(const CyclotomicInt& v, unsigned k) {
  unsigned n = v.order();
  k %= n;
  if (std::gcd(k, n) != 1) throw std::invalid_argument("galois exponent not coprime");
  std::vector<BigInt> c(n, BigInt(0));
  const auto& src = v.coeffs();
  for (std::size_t i = 0; i < src.size(); ++i) c[(i * std::uint64_t(k)) % n] += src[i];
  return CyclotomicInt::from_coeffs(n, std::move(c));
}

std::complex<double> embed_complex(const CyclotomicInt& v, unsigned j) {
  unsigned n = v.order();
  std::complex<double> out(0.0, 0.0);
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    double ang = two_pi * double((i * std::uint64_t(j)) % n) / double(n);
    out += c[i].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

std::string to_string(const CyclotomicInt& v) {
  std::ostringstream os;
  os << "zeta" << v.order() << "[";
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& v) {
  return os << to_string(v);
}

QuadInt7::QuadInt7(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
  if ((a - b) % 2 != 0) throw std::invalid_argument("half-integer parity violated");
}

QuadInt7 QuadInt7::operator+(const QuadInt7& o) const { return QuadInt7(a + o.a, b + o.b); }
QuadInt7 QuadInt7::operator-(const QuadInt7& o) const { return QuadInt7(a - o.a, b - o.b); }

QuadInt7 QuadInt7::operator*(const QuadInt7& o) const {
  BigInt na = a * o.a - 7 * b * o.b;
  BigInt nb = a * o.b + b * o.a;
  if (na % 2 != 0 || nb % 2 != 0) throw integrity_error("quadratic product not half-integral");
  return QuadInt7(na / 2, nb / 2);
}

BigInt QuadInt7::norm() const {
  BigInt n = a * a + 7 * b * b;
  if (n % 4 != 0) throw integrity_error("quadratic norm not integral");
  return n / 4;
}

std::string to_string(const QuadInt7& v) {
  std::ostringstream os;
  os << "(" << v.a << (v.b >= 0 ? "+" : "-") << (v.b >= 0 ? v.b : -v.b) << "*sqrt(-7))/2";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt7& v) {
  return os << to_string(v);
}

bool is_sigma2_fixed(const CyclotomicInt& v) {
  if (v.order() != 7) throw std::invalid_argument("sigma2 test needs order 7");
  const auto& c = v.coeffs();
  return c[3] == 0 && c[5] == 0 && c[1] == c[2] && c[2] == c[4];
}

QuadInt7 to_quad7(const CyclotomicInt& v) {
  if (!is_sigma2_fixed(v)) throw integrity_error("value not in the quadratic subring");
  const auto& c = v.coeffs();
  return QuadInt7(2 * c[0] - c[1], c[1]);
}

CyclotomicInt from_quad7(const QuadInt7& v) {
  BigInt d0 = (v.a + v.b) / 2;
  return CyclotomicInt::from_coeffs(7, {d0, v.b, v.b, BigInt(0), v.b, BigInt(0)});
}

}
