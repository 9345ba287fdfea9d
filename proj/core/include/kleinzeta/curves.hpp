#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kleinzeta/charsums.hpp"
#include "kleinzeta/field.hpp"

namespace kleinzeta {

enum class CurveKind { Klein, Fermat, KleinBirational, FermatAffine };

// Klein:           x^3 y + y^3 z + z^3 x = 0, projective, genus 3
// Fermat:          x^n + y^n + z^n = 0, projective, genus (n-1)(n-2)/2
// KleinBirational: y^7 = x^2 (x + 1), the projective model Y^7 = X^3 Z^4 + X^2 Z^5
// FermatAffine:    x^n + y^n = 1 in the plane
struct CurveModel {
  CurveKind kind;
  unsigned n = 0;  // Fermat exponent, 0 for the Klein models

  static CurveModel klein() { return {CurveKind::Klein, 0}; }
  static CurveModel fermat(unsigned n) { return {CurveKind::Fermat, n}; }
  static CurveModel klein_birational() { return {CurveKind::KleinBirational, 0}; }
  static CurveModel fermat_affine(unsigned n) { return {CurveKind::FermatAffine, n}; }

  std::string name() const;
  unsigned genus() const;  // smooth-model genus; FermatAffine uses the closure's
};

struct Budgets {
  std::uint64_t plane = 1ull << 12;   // max q for O(q^2) plane scans
  std::uint64_t linear = 1ull << 20;  // max q for O(q) scans
  std::uint32_t field = max_field_size;
};

struct ProjPoint {
  Elem x, y, z;
  bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
};

// Scales so the last nonzero coordinate is 1; pt must not be (0,0,0).
ProjPoint normalize_point(const Field& F, ProjPoint pt);

bool on_curve(const Field& F, const CurveModel& c, ProjPoint pt);

// Points in the deterministic order (x,y,1) ascending, then (x,1,0), then
// (1,0,0).  FermatAffine yields only (x,y,1).  Throws budget_error when the
// scan would exceed budgets.plane.
std::vector<ProjPoint> enumerate_points(const Field& F, const CurveModel& c,
                                        const Budgets& b = {});

// Plane scan point count; O(q^2), subject to budgets.plane.
std::uint64_t count_projective_brute(const Field& F, const CurveModel& c,
                                     const Budgets& b = {}, unsigned threads = 0);

// Whether -1 is an n-th power in F^*.
bool minus_one_is_nth_power(const Field& F, unsigned n);

struct NthPowerDelta {
  bool is_power;            // -1 = x^n solvable
  std::uint64_t solutions;  // #{x : x^n = -1} = gcd(n, q-1) when solvable
};

NthPowerDelta delta_minus_one(const Field& F, unsigned n);

// #{(x,y) : x^n + y^n = 1} from Jacobi sums, exact, any q.  Exponents with
// n not dividing q-1 reduce to gcd(n, q-1).
std::uint64_t count_affine_fermat_formula(const Field& F, unsigned n);

// Projective Fermat count: affine part plus the n'*delta points at infinity.
std::uint64_t fermat_count_formula(const Field& F, unsigned n);

// Klein count: q + 1 + sum_{i=1}^{6} J(chi^i, chi^{2i}) when 7 | q-1, and
// q + 1 otherwise.  Requires p != 7.
std::uint64_t klein_count_formula(const Field& F);

// Count of the birational model via the O(q) seventh-power histogram,
// subject to budgets.linear.
std::uint64_t count_birational(const Field& F, const Budgets& b = {});

// The degree-7 cover phi(x:y:z) = (x^3 z : y^3 x : z^3 y) from the n=7 Fermat
// curve onto the Klein quartic.
ProjPoint phi_cover(const Field& F, ProjPoint pt);

struct CoverAudit {
  std::uint64_t source_points = 0;
  std::uint64_t klein_points = 0;
  std::uint64_t image_points = 0;
  bool all_on_target = false;  // phi lands on the Klein quartic everywhere
  bool fibers_ok = false;      // 7 | q-1: nonempty fibers over points with
                               // xyz != 0 have size exactly 7; else phi is a
                               // bijection onto the Klein points
  bool pass = false;
};

CoverAudit audit_cover(const Field& F, const Budgets& b = {});

// (x:y:z) -> (y:z:x) maps the point set to itself.
bool klein_rotation_closed(const Field& F, const Budgets& b = {});

// (x:y:z) -> (w^2 x : w y : w^4 z) for w of order 7; needs 7 | q-1.
bool klein_scaling_closed(const Field& F, const Budgets& b = {});

}
