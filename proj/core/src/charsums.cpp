#include "kleinzeta/charsums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kleinzeta/errors.hpp"

namespace kleinzeta {
namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

void require_same_field(const Character& a, const Character& b) {
  if (!a.field().same_field(b.field()))
    throw std::invalid_argument("characters live on different fields");
}

}  // namespace

std::complex<double> gauss_sum(const Character& chi) {
  const Field& F = chi.field();
  std::uint32_t q = F.q(), p = F.p();
  unsigned n = chi.order();
  std::complex<double> acc(0.0, 0.0);
  if (chi.is_trivial()) acc += 1.0;  // x = 0 term
  for (Elem x = 1; x < q; ++x) {
    double ang = two_pi * (double(chi.exponent(x)) / n + double(F.trace(x)) / p);
    acc += std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

CyclotomicInt jacobi_sum(const Character& chi1, const Character& chi2) {
  require_same_field(chi1, chi2);
  const Field& F = chi1.field();
  std::uint32_t q = F.q();
  unsigned n1 = chi1.order(), n2 = chi2.order();
  unsigned N = std::lcm(n1, n2);
  std::uint64_t s1 = N / n1, s2 = N / n2;
  std::vector<std::uint64_t> counts(N, 0);
  for (Elem x = 2; x < q; ++x) {
    std::uint64_t t = s1 * chi1.exponent(x) + s2 * chi2.exponent(F.sub(1, x));
    ++counts[t % N];
  }
  // x = 0 and x = 1 carry the trivial-character convention values.
  if (chi1.is_trivial()) ++counts[0];
  if (chi2.is_trivial()) ++counts[0];
  std::vector<BigInt> c(N);
  for (unsigned i = 0; i < N; ++i) c[i] = counts[i];
  return CyclotomicInt::from_coeffs(N, std::move(c));
}

CyclotomicInt jacobi_multi(const std::vector<Character>& chis) {
  if (chis.empty() || chis.size() > 3)
    throw std::invalid_argument("jacobi_multi takes 1 to 3 characters");
  for (const auto& c : chis) require_same_field(c, chis[0]);
  const Field& F = chis[0].field();
  std::uint32_t q = F.q();
  unsigned N = 1;
  for (const auto& c : chis) N = std::lcm(N, c.order());
  std::vector<std::uint64_t> scale;
  for (const auto& c : chis) scale.push_back(N / c.order());

  std::vector<std::uint64_t> counts(N, 0);
  auto accumulate = [&](const std::vector<Elem>& xs) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] == 0) {
        if (!chis[i].is_trivial()) return;
      } else {
        t += scale[i] * chis[i].exponent(xs[i]);
      }
    }
    ++counts[t % N];
  };

  if (chis.size() == 1) {
    accumulate({F.one()});
  } else if (chis.size() == 2) {
    for (Elem x = 0; x < q; ++x) accumulate({x, F.sub(1, x)});
  } else {
    for (Elem x = 0; x < q; ++x) {
      Elem rest = F.sub(1, x);
      for (Elem y = 0; y < q; ++y) accumulate({x, y, F.sub(rest, y)});
    }
  }
  std::vector<BigInt> c(N);
  for (unsigned i = 0; i < N; ++i) c[i] = counts[i];
  return CyclotomicInt::from_coeffs(N, std::move(c));
}

RelationCheck gauss_jacobi_relation_check(const Character& chi1, const Character& chi2,
                                          double tol) {
  require_same_field(chi1, chi2);
  Character prod = make_character(chi1.field(), chi1.index() + chi2.index());
  if (chi1.is_trivial() || chi2.is_trivial() || prod.is_trivial())
    throw std::invalid_argument("relation check needs chi1, chi2, chi1*chi2 nontrivial");
  std::complex<double> lhs = gauss_sum(chi1) * gauss_sum(chi2);
  std::complex<double> rhs = embed_complex(jacobi_sum(chi1, chi2)) * gauss_sum(prod);
  double err = std::abs(lhs - rhs);
  return {lhs, rhs, err, err <= tol * (1.0 + std::abs(lhs))};
}

HasseDavenportReport hasse_davenport_check(const Character& chi1, const Character& chi2,
                                           const Field& big) {
  require_same_field(chi1, chi2);
  unsigned r = big.r() / chi1.field().r();
  Character l1 = lift_character(chi1, big);
  Character l2 = lift_character(chi2, big);
  CyclotomicInt lifted = -jacobi_sum(l1, l2);
  CyclotomicInt base = -jacobi_sum(chi1, chi2);
  unsigned N = std::lcm(chi1.order(), chi2.order());
  CyclotomicInt power = CyclotomicInt::from_int(N, 1);
  for (unsigned i = 0; i < r; ++i) power = power * base;
  bool match = lifted == power;
  return {std::move(lifted), std::move(power), match, match};
}

HasseDavenportReport hasse_davenport_check(const Character& chi, const Field& big) {
  return hasse_davenport_check(chi, chi, big);
}

HasseDavenportReport hasse_davenport_check(const Character& chi, unsigned r) {
  Field big = build_field(chi.field().p(), chi.field().r() * r);
  return hasse_davenport_check(chi, chi, big);
}

GaussLiftCheck hasse_davenport_gauss_check(const Character& chi, const Field& big,
                                           double tol) {
  unsigned r = big.r() / chi.field().r();
  std::complex<double> g = gauss_sum(chi);
  std::complex<double> pred(1.0, 0.0);
  for (unsigned i = 0; i < r; ++i) pred *= -g;
  pred = -pred;
  std::complex<double> lifted = gauss_sum(lift_character(chi, big));
  double err = std::abs(lifted - pred);
  return {lifted, pred, err, err <= tol * (1.0 + std::abs(pred))};
}

}
