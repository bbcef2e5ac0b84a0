#include "biell/lattice.hpp"

#include <numeric>

namespace biell {

std::int64_t intersect(NumClass x, NumClass y) { return x.a * y.b + x.b * y.a; }

std::int64_t intersect_scaled(NumClass x, NumClass y, std::int64_t scale) {
  return scale * intersect(x, y);
}

std::int64_t self_intersection(NumClass d) { return 2 * d.a * d.b; }

bool is_primitive(NumClass d) {
  if (d.a == 0 && d.b == 0) return false;
  return std::gcd(d.a, d.b) == 1;
}

std::int64_t mukai_pair(const MukaiVector& v, const MukaiVector& w) {
  return intersect(v.c1, w.c1) - v.r * w.s - w.r * v.s;
}

std::int64_t mukai_pair_scaled(const MukaiVector& v, const MukaiVector& w, std::int64_t scale) {
  return intersect_scaled(v.c1, w.c1, scale) - v.r * w.s - w.r * v.s;
}

std::int64_t mukai_square(const MukaiVector& v) { return mukai_pair(v, v); }

std::int64_t chi(const MukaiVector& v) { return v.s; }

MukaiVector line_bundle(NumClass d) { return {1, d, d.a * d.b}; }

MukaiVector twist(const MukaiVector& v, NumClass d) {
  // d^2/2 = d.a * d.b, so the s component stays integral.
  return {v.r, v.c1 + v.r * d, v.s + intersect(v.c1, d) + v.r * d.a * d.b};
}

MukaiVector serre_dual_ulrich(const MukaiVector& v, const Polarization& h) {
  return twist({v.r, -v.c1, v.s}, 3 * h.cls);
}

MukaiVector pullback(const MukaiVector& v, const CoverDescriptor& cover) {
  return {v.r,
          {cover.pullback_a * v.c1.a, cover.pullback_b * v.c1.b},
          cover.degree * v.s};
}

bool is_primitive(const MukaiVector& v) {
  std::int64_t g = std::gcd(std::gcd(v.r, v.c1.a), std::gcd(v.c1.b, v.s));
  return g == 1;
}

std::int64_t l_invariant(const MukaiVector& v, SurfaceType t) {
  if (!is_primitive(v)) throw precondition_error("l(v) requires a primitive Mukai vector");
  const auto& inv = invariants(t);
  const std::int64_t ratio = inv.canonical_order / inv.lambda;
  return std::gcd(std::gcd(v.r, v.c1.a),
                  std::gcd(ratio * v.c1.b, inv.canonical_order * v.s));
}

}  // namespace biell
