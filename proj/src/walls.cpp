#include "biell/walls.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace biell {

namespace {

std::int64_t divisibility(const MukaiVector& v) {
  return std::gcd(std::gcd(v.r, v.c1.a), std::gcd(v.c1.b, v.s));
}

}  // namespace

bool bogomolov_ok(const MukaiVector& v) {
  if (v.r < 1) throw precondition_error("Bogomolov check requires rank >= 1");
  return mukai_square(v) >= 0;
}

std::vector<Wall> enumerate_walls(const MukaiVector& v,
                                  std::optional<std::int64_t> coefficient_box) {
  if (v.r < 2) throw precondition_error("wall enumeration requires rank >= 2");
  const std::int64_t vsq = mukai_square(v);
  if (vsq < 0) throw precondition_error("wall enumeration requires v^2 >= 0");

  // 0 < -xi^2 <= (r^2/4) v^2 with xi = (x, y), x > 0 > y, becomes
  // 0 < 8 x (-y) <= r^2 v^2 in integers. Both coordinates are bounded by
  // the product bound, so the search is finite without any extra cap.
  const std::int64_t rhs = v.r * v.r * vsq;
  std::int64_t cap = rhs / 8;
  if (coefficient_box) cap = std::min(cap, *coefficient_box);

  std::vector<Wall> walls;
  for (std::int64_t x = 1; x <= cap; ++x) {
    for (std::int64_t y = -1; y >= -cap; --y) {
      if (8 * x * (-y) > rhs) break;
      if (std::gcd(x, -y) != 1) continue;
      // xi.H = x*q + y*p vanishes on the ample ray through (x, -y).
      walls.push_back({{x, y}, {x, -y}});
    }
  }
  std::sort(walls.begin(), walls.end(), [](const Wall& lhs, const Wall& rhs) {
    return lhs.xi.a != rhs.xi.a ? lhs.xi.a < rhs.xi.a : lhs.xi.b < rhs.xi.b;
  });
  return walls;
}

bool is_generic(const Polarization& h, const MukaiVector& v) {
  if (!h.ample()) throw precondition_error("genericity is defined for ample polarizations");
  if (v.r < 2 || mukai_square(v) < 0) return true;  // no walls
  for (const Wall& w : enumerate_walls(v))
    if (intersect(w.xi, h.cls) == 0) return false;
  return true;
}

NonemptinessVerdict moduli_nonempty(const MukaiVector& v, const Polarization& h, SurfaceType t) {
  if (v.r < 1) throw precondition_error("non-emptiness requires rank >= 1");
  if (!h.ample()) throw precondition_error("non-emptiness requires an ample polarization");
  (void)t;
  if (v.r >= 2 && mukai_square(v) >= 0) {
    for (const Wall& w : enumerate_walls(v)) {
      if (intersect(w.xi, h.cls) == 0)
        throw precondition_error("polarization lies on the wall xi = (" +
                                 std::to_string(w.xi.a) + "," + std::to_string(w.xi.b) +
                                 ") for v");
    }
  }

  NonemptinessVerdict out;
  const std::int64_t vsq = mukai_square(v);
  out.nonempty = vsq >= 0;
  if (vsq < 0) {
    out.stable_nonempty = Tristate::no;
    out.reason = "bogomolov-violation";
  } else if (vsq == 0 && divisibility(v) >= 2) {
    // An isotropic vector divisible in the Mukai lattice admits no mu-stable
    // sheaf; only strictly semistable ones can occur.
    out.stable_nonempty = Tristate::no;
    out.reason = "isotropic-divisible-no-mu-stable";
  } else {
    out.stable_nonempty = Tristate::unknown;
    out.reason = "nonempty-iff-bogomolov-at-generic-polarization";
  }
  return out;
}

ComponentCount component_count(const MukaiVector& v, SurfaceType t) {
  if (v.r < 2) throw precondition_error("component count requires rank >= 2");
  const std::int64_t gcd_c1 = std::gcd(v.c1.a, v.c1.b);
  if (std::gcd(v.r, gcd_c1) != 1)
    throw precondition_error("component count requires gcd(r, c1) = 1; gcd = " +
                             std::to_string(std::gcd(v.r, gcd_c1)));
  if (mukai_square(v) <= 0)
    throw precondition_error("component count requires v^2 > 0; v^2 = " +
                             std::to_string(mukai_square(v)));

  const auto& inv = invariants(t);
  if (inv.torsion_order == 1) {
    // Numerical and algebraic equivalence coincide, so the determinant
    // stratification of the moduli space has a single stratum.
    return {1, "torsion-free-single-determinant-stratum"};
  }
  if (std::gcd<std::int64_t>(v.r, inv.canonical_order) != 1)
    throw precondition_error(
        "component count requires gcd(r, ord(omega)) = 1; gcd(" + std::to_string(v.r) + "," +
        std::to_string(inv.canonical_order) + ") = " +
        std::to_string(std::gcd<std::int64_t>(v.r, inv.canonical_order)));
  return {inv.torsion_order, "irreducible-components-equal-torsion-classes"};
}

IsotropicWbnVerdict isotropic_wbn(const MukaiVector& v, std::int64_t n, SurfaceType t) {
  if (n < 1) throw precondition_error("isotropic criterion requires n >= 1");
  if (v.r < 1) throw precondition_error("isotropic criterion requires rank >= 1");
  if (!is_primitive(v)) throw precondition_error("isotropic criterion requires a primitive vector");
  if (mukai_square(v) != 0)
    throw precondition_error("isotropic criterion requires v^2 = 0");
  if (self_intersection(v.c1) == 0)
    throw precondition_error("isotropic criterion requires c1^2 != 0");

  const std::int64_t l = l_invariant(v, t);
  const std::int64_t ord = invariants(t).canonical_order;
  if (ord % (n * l) == 0) return {true, "isotropic-wbn-criterion"};
  return {false, "criterion-not-applicable: n*l(v) does not divide ord(omega)"};
}

}  // namespace biell
