#include "kleinzeta/curves.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kleinzeta/errors.hpp"
#include "kleinzeta/parallel.hpp"

namespace kleinzeta {

std::string CurveModel::name() const {
  switch (kind) {
    case CurveKind::Klein:
      return "klein";
    case CurveKind::Fermat:
      return "fermat" + std::to_string(n);
    case CurveKind::KleinBirational:
      return "klein-birational";
    case CurveKind::FermatAffine:
      return "fermat" + std::to_string(n) + "-affine";
  }
  return "?";
}

unsigned CurveModel::genus() const {
  switch (kind) {
    case CurveKind::Klein:
    case CurveKind::KleinBirational:
      return 3;
    case CurveKind::Fermat:
    case CurveKind::FermatAffine:
      return (n - 1) * (n - 2) / 2;
  }
  return 0;
}

ProjPoint normalize_point(const Field& F, ProjPoint pt) {
  if (pt.z != 0) {
    Elem s = F.inv(pt.z);
    return {F.mul(pt.x, s), F.mul(pt.y, s), 1};
  }
  if (pt.y != 0) {
    Elem s = F.inv(pt.y);
    return {F.mul(pt.x, s), 1, 0};
  }
  if (pt.x == 0) throw std::invalid_argument("zero vector is not a projective point");
  return {1, 0, 0};
}

bool on_curve(const Field& F, const CurveModel& c, ProjPoint pt) {
  switch (c.kind) {
    case CurveKind::Klein: {
      Elem t = F.add(F.mul(F.pow(pt.x, 3), pt.y),
                     F.add(F.mul(F.pow(pt.y, 3), pt.z), F.mul(F.pow(pt.z, 3), pt.x)));
      return t == 0;
    }
    case CurveKind::Fermat:
      return F.add(F.pow(pt.x, c.n), F.add(F.pow(pt.y, c.n), F.pow(pt.z, c.n))) == 0;
    case CurveKind::KleinBirational:
      return F.pow(pt.y, 7) == F.add(F.mul(F.pow(pt.x, 3), F.pow(pt.z, 4)),
                                     F.mul(F.pow(pt.x, 2), F.pow(pt.z, 5)));
    case CurveKind::FermatAffine:
      return pt.z == 1 && F.add(F.pow(pt.x, c.n), F.pow(pt.y, c.n)) == F.one();
  }
  return false;
}

static void check_plane_budget(const Field& F, const Budgets& b) {
  if (F.q() > b.plane)
    throw budget_error("plane scan over q = " + std::to_string(F.q()) +
                       " exceeds budget " + std::to_string(b.plane));
}

std::vector<ProjPoint> enumerate_points(const Field& F, const CurveModel& c,
                                        const Budgets& b) {
  check_plane_budget(F, b);
  std::uint32_t q = F.q();
  std::vector<ProjPoint> out;
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      if (on_curve(F, c, {x, y, 1})) out.push_back({x, y, 1});
  if (c.kind == CurveKind::FermatAffine) return out;
  for (Elem x = 0; x < q; ++x)
    if (on_curve(F, c, {x, 1, 0})) out.push_back({x, 1, 0});
  if (on_curve(F, c, {1, 0, 0})) out.push_back({1, 0, 0});
  return out;
}

namespace {

// z = 1 slice of the Klein quartic: x^3 y + y^3 + x = 0.
std::uint64_t klein_affine_prime(const Field& F, unsigned threads) {
  const std::uint32_t p = F.q();
  std::vector<std::uint32_t> cube(p);
  for (std::uint64_t x = 0; x < p; ++x)
    cube[x] = std::uint32_t(x * x % p * x % p);
  auto parts = map_chunks<std::uint64_t>(
      p, threads, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
          std::uint32_t c = cube[x];
          std::uint32_t s = std::uint32_t(x);  // (c*y + x) mod p, starting at y = 0
          for (std::uint32_t y = 0; y < p; ++y) {
            std::uint32_t t = s + cube[y];
            if (t >= p) t -= p;
            cnt += (t == 0);
            s += c;
            if (s >= p) s -= p;
          }
        }
        return cnt;
      });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

std::uint64_t klein_affine_generic(const Field& F, unsigned threads) {
  const std::uint32_t q = F.q();
  std::vector<Elem> cube(q);
  for (Elem x = 0; x < q; ++x) cube[x] = F.pow(x, 3);
  auto parts = map_chunks<std::uint64_t>(
      q, threads, [&, F](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
          Elem cx = cube[x];
          Elem xe = Elem(x);
          for (Elem y = 0; y < q; ++y) {
            Elem v = F.add(F.mul(cx, y), F.add(cube[y], xe));
            cnt += (v == 0);
          }
        }
        return cnt;
      });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

// Counts (x, y) with x^n + y^n + c = 0; c = 1 is the z = 1 slice of FC_n.
std::uint64_t fermat_affine_brute(const Field& F, unsigned n, Elem c,
                                  unsigned threads) {
  const std::uint32_t q = F.q();
  std::vector<Elem> pw(q);
  for (Elem x = 0; x < q; ++x) pw[x] = F.pow(x, n);
  const bool prime = F.r() == 1;
  auto parts = map_chunks<std::uint64_t>(
      q, threads, [&, F](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
          if (prime) {
            std::uint32_t t0 = pw[x] + c;
            if (t0 >= q) t0 -= q;
            for (Elem y = 0; y < q; ++y) {
              std::uint32_t t = t0 + pw[y];
              if (t >= q) t -= q;
              cnt += (t == 0);
            }
          } else {
            Elem t0 = F.add(pw[x], c);
            for (Elem y = 0; y < q; ++y) cnt += (F.add(t0, pw[y]) == 0);
          }
        }
        return cnt;
      });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

std::uint64_t birational_affine_brute(const Field& F, unsigned threads) {
  const std::uint32_t q = F.q();
  std::vector<Elem> rhs(q), y7(q);
  for (Elem x = 0; x < q; ++x) rhs[x] = F.add(F.pow(x, 3), F.pow(x, 2));
  for (Elem y = 0; y < q; ++y) y7[y] = F.pow(y, 7);
  auto parts = map_chunks<std::uint64_t>(
      q, threads, [&, F](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t cnt = 0;
        for (std::uint64_t x = lo; x < hi; ++x)
          for (Elem y = 0; y < q; ++y) cnt += (y7[y] == rhs[x]);
        return cnt;
      });
  std::uint64_t total = 0;
  for (auto v : parts) total += v;
  return total;
}

}  // namespace

std::uint64_t count_projective_brute(const Field& F, const CurveModel& c,
                                     const Budgets& b, unsigned threads) {
  check_plane_budget(F, b);
  std::uint32_t q = F.q();
  std::uint64_t total = 0;
  switch (c.kind) {
    case CurveKind::Klein:
      total = F.r() == 1 ? klein_affine_prime(F, threads)
                         : klein_affine_generic(F, threads);
      break;
    case CurveKind::Fermat:
      total = fermat_affine_brute(F, c.n, F.one(), threads);
      break;
    case CurveKind::FermatAffine:
      total = fermat_affine_brute(F, c.n, F.neg(F.one()), threads);
      break;
    case CurveKind::KleinBirational:
      total = birational_affine_brute(F, threads);
      break;
  }
  if (c.kind == CurveKind::FermatAffine) return total;
  for (Elem x = 0; x < q; ++x)
    total += on_curve(F, c, {x, 1, 0});
  total += on_curve(F, c, {1, 0, 0});
  return total;
}

bool minus_one_is_nth_power(const Field& F, unsigned n) {
  unsigned np = unsigned(std::gcd<std::uint64_t>(n, F.q() - 1));
  Elem m1 = F.neg(F.one());
  return F.log(m1) % np == 0;
}

NthPowerDelta delta_minus_one(const Field& F, unsigned n) {
  unsigned np = unsigned(std::gcd<std::uint64_t>(n, F.q() - 1));
  bool d = minus_one_is_nth_power(F, n);
  return {d, d ? np : 0u};
}

namespace {

// #{(x, y) : x^n + y^n = c} for c != 0 via sum_{i,j} chi^{i+j}(c) J(chi^i, chi^j)
// over the full character group of order gcd(n, q-1).
std::uint64_t fermat_rhs_count(const Field& F, unsigned n, Elem c) {
  if (n == 0) throw std::invalid_argument("fermat exponent must be positive");
  if (c == 0) throw std::invalid_argument("rhs must be nonzero");
  unsigned np = unsigned(std::gcd<std::uint64_t>(n, F.q() - 1));
  Character chi = character_of_order(F, np);
  CyclotomicInt total(np);
  for (unsigned i = 0; i < np; ++i)
    for (unsigned j = 0; j < np; ++j) {
      CyclotomicInt J = jacobi_sum(chi.power(i), chi.power(j)).promoted(np);
      CyclotomicInt twist = chi.power(i + j)(c).promoted(np);
      total += J * twist;
    }
  BigInt v = total.rational_value();
  if (v < 0) throw integrity_error("negative affine count");
  return v.convert_to<std::uint64_t>();
}

}  // namespace

std::uint64_t count_affine_fermat_formula(const Field& F, unsigned n) {
  return fermat_rhs_count(F, n, F.one());
}

std::uint64_t fermat_count_formula(const Field& F, unsigned n) {
  std::uint64_t slice = fermat_rhs_count(F, n, F.neg(F.one()));
  return slice + delta_minus_one(F, n).solutions;
}

std::uint64_t klein_count_formula(const Field& F) {
  if (F.p() == 7) throw std::invalid_argument("Klein count formula needs p != 7");
  std::uint32_t q = F.q();
  if ((q - 1) % 7 != 0) return std::uint64_t(q) + 1;
  Character chi = character_of_order(F, 7);
  CyclotomicInt total(7);
  for (unsigned i = 1; i <= 6; ++i)
    total += jacobi_sum(chi.power(i), chi.power(2 * i));
  BigInt v = total.rational_value() + q + 1;
  return v.convert_to<std::uint64_t>();
}

std::uint64_t count_birational(const Field& F, const Budgets& b) {
  std::uint32_t q = F.q();
  if (q > b.linear)
    throw budget_error("linear scan over q = " + std::to_string(q) +
                       " exceeds budget " + std::to_string(b.linear));
  unsigned np = unsigned(std::gcd<std::uint64_t>(7, q - 1));
  std::uint64_t total = 1;  // the point at infinity (1 : 0 : 0)
  for (Elem x = 0; x < q; ++x) {
    Elem a = F.add(F.pow(x, 3), F.pow(x, 2));
    if (a == 0)
      total += 1;
    else if (F.log(a) % np == 0)
      total += np;
  }
  return total;
}

ProjPoint phi_cover(const Field& F, ProjPoint pt) {
  return {F.mul(F.pow(pt.x, 3), pt.z), F.mul(F.pow(pt.y, 3), pt.x),
          F.mul(F.pow(pt.z, 3), pt.y)};
}

CoverAudit audit_cover(const Field& F, const Budgets& b) {
  const std::uint32_t q = F.q();
  auto src = enumerate_points(F, CurveModel::fermat(7), b);
  auto klein = enumerate_points(F, CurveModel::klein(), b);

  CoverAudit a;
  a.source_points = src.size();
  a.klein_points = klein.size();

  auto key = [q](const ProjPoint& pt) {
    return (std::uint64_t(pt.x) * q + pt.y) * q + pt.z;
  };
  bool all_on = true;
  std::map<std::uint64_t, std::uint64_t> fibers;
  for (const auto& pt : src) {
    ProjPoint img = normalize_point(F, phi_cover(F, pt));
    if (!on_curve(F, CurveModel::klein(), img)) all_on = false;
    ++fibers[key(img)];
  }
  a.image_points = fibers.size();
  a.all_on_target = all_on;

  bool ok = true;
  if (q % 7 == 1) {
    for (const auto& [k, cnt] : fibers) {
      Elem z = Elem(k % q), y = Elem(k / q % q), x = Elem(k / q / q);
      if (x != 0 && y != 0 && z != 0 && cnt != 7) ok = false;
    }
  } else {
    ok = a.source_points == a.image_points && a.image_points == a.klein_points;
  }
  a.fibers_ok = ok;
  a.pass = all_on && ok;
  return a;
}

bool klein_rotation_closed(const Field& F, const Budgets& b) {
  for (const auto& pt : enumerate_points(F, CurveModel::klein(), b))
    if (!on_curve(F, CurveModel::klein(), {pt.y, pt.z, pt.x})) return false;
  return true;
}

bool klein_scaling_closed(const Field& F, const Budgets& b) {
  std::uint32_t q = F.q();
  if ((q - 1) % 7 != 0)
    throw std::invalid_argument("scaling automorphism needs a 7th root of unity");
  Elem w = F.exp((q - 1) / 7);
  Elem w2 = F.mul(w, w), w4 = F.mul(w2, w2);
  for (const auto& pt : enumerate_points(F, CurveModel::klein(), b)) {
    ProjPoint img{F.mul(w2, pt.x), F.mul(w, pt.y), F.mul(w4, pt.z)};
    if (!on_curve(F, CurveModel::klein(), img)) return false;
  }
  return true;
}

}
