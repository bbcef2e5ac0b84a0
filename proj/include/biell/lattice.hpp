#pragma once

#include <cstdint>

#include "biell/surface.hpp"

namespace biell {

/// Numerical divisor class a*A0 + b*B0 in Num(S), a hyperbolic plane.
struct NumClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const NumClass&, const NumClass&) = default;
  friend NumClass operator+(NumClass x, NumClass y) { return {x.a + y.a, x.b + y.b}; }
  friend NumClass operator-(NumClass x, NumClass y) { return {x.a - y.a, x.b - y.b}; }
  friend NumClass operator-(NumClass x) { return {-x.a, -x.b}; }
  friend NumClass operator*(std::int64_t n, NumClass x) { return {n * x.a, n * x.b}; }
};

/// (a,b).(c,d) = a*d + b*c.
std::int64_t intersect(NumClass x, NumClass y);

/// Same form with A~0 . B~0 = scale, as on a cover target.
std::int64_t intersect_scaled(NumClass x, NumClass y, std::int64_t scale);

/// D^2 = 2ab; always even.
std::int64_t self_intersection(NumClass d);

bool is_primitive(NumClass d);

/// Mukai vector (rank, c1, s) with s = ch2 = chi.
struct MukaiVector {
  std::int64_t r = 0;
  NumClass c1;
  std::int64_t s = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// <v, w> = c1.c1' - r*s' - r'*s.
std::int64_t mukai_pair(const MukaiVector& v, const MukaiVector& w);
std::int64_t mukai_pair_scaled(const MukaiVector& v, const MukaiVector& w, std::int64_t scale);

/// v^2 = c1^2 - 2rs.
std::int64_t mukai_square(const MukaiVector& v);

/// Euler characteristic; equals the s component and -<(1,0,0), v>.
std::int64_t chi(const MukaiVector& v);

/// Vector of a line bundle with first Chern class d: (1, d, d^2/2).
MukaiVector line_bundle(NumClass d);

/// Product with (1, d, d^2/2): (r, c1 + r*d, s + c1.d + r*d^2/2).
MukaiVector twist(const MukaiVector& v, NumClass d);

struct Polarization {
  NumClass cls;
  bool ample() const { return cls.a > 0 && cls.b > 0; }
};

/// Numerical vector of E* (x) omega_S (x) O(3H) for v = v(E); omega_S is
/// numerically trivial, so this is twist((r, -c1, s), 3H).
MukaiVector serre_dual_ulrich(const MukaiVector& v, const Polarization& h);

/// Pullback along an etale cover: coefficient rules on c1, degree scaling on s.
MukaiVector pullback(const MukaiVector& v, const CoverDescriptor& cover);

/// gcd(r, a, b, s) = 1.
bool is_primitive(const MukaiVector& v);

/// l(v) = gcd(r, a, (ord(omega_S)/lambda_S) * b, ord(omega_S) * s) for
/// primitive v; the pullback to the canonical cover divided by l(v) is
/// primitive there. Throws on non-primitive input.
std::int64_t l_invariant(const MukaiVector& v, SurfaceType t);

}  // namespace biell
