#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biell/lattice.hpp"
#include "biell/surface.hpp"

namespace biell {

/// A wall for v in the ample cone: the ray xi.H = 0. xi is primitive with
/// xi^2 < 0, sign-normalized to a > 0 > b; ample_direction is the primitive
/// ample class spanning the ray.
struct Wall {
  NumClass xi;
  NumClass ample_direction;

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// v^2 >= 0. Throws on rank <= 0.
bool bogomolov_ok(const MukaiVector& v);

/// All candidate walls for v, i.e. primitive mixed-sign xi with
/// 0 < -xi^2 <= (r^2/4) v^2. The bound comes from the rank-weighted identity
///   v^2/r = v'^2/r' + v''^2/r'' - xi^2/(r r' r'')
/// applied to a same-slope splitting v = v' + v'' with both squares >= 0.
/// Results are sorted lexicographically on xi. Throws on rank < 2 or v^2 < 0.
/// coefficient_box, when given, additionally caps the coefficient search;
/// a cap below the derived bound can truncate the list.
std::vector<Wall> enumerate_walls(const MukaiVector& v,
                                  std::optional<std::int64_t> coefficient_box = std::nullopt);

/// H lies on no wall for v. Ranks < 2 and vectors with v^2 < 0 have no walls.
/// Throws unless H is ample.
bool is_generic(const Polarization& h, const MukaiVector& v);

enum class Tristate { yes, no, unknown };

struct NonemptinessVerdict {
  bool nonempty = false;
  Tristate stable_nonempty = Tristate::unknown;
  std::string reason;
};

/// Non-emptiness of the moduli space of semistable sheaves with vector v for
/// a generic polarization: nonempty iff v^2 >= 0. stable_nonempty is decided
/// only where a criterion applies (no: v^2 < 0, or v isotropic and divisible).
/// Throws if H is not ample or lies on a wall for v (the message names the wall).
NonemptinessVerdict moduli_nonempty(const MukaiVector& v, const Polarization& h, SurfaceType t);

struct ComponentCount {
  int count = 0;
  std::string citation;
};

/// Number of irreducible components of M_H(v). Torsion-free types have a
/// single determinant stratum; otherwise the count equals |H^2(S,Z)_tor|
/// under the hypotheses r >= 2, gcd(r, c1) = 1, gcd(r, ord(omega_S)) = 1 and
/// v^2 > 0. Violated hypotheses are reported individually.
ComponentCount component_count(const MukaiVector& v, SurfaceType t);

struct IsotropicWbnVerdict {
  bool satisfied = false;
  std::string citation;
};

/// Weak Brill-Noether for the moduli space of n*v, v primitive isotropic with
/// c1^2 != 0: holds whenever n*l(v) divides ord(omega_S). A false answer means
/// the criterion does not apply, not a disproof.
IsotropicWbnVerdict isotropic_wbn(const MukaiVector& v, std::int64_t n, SurfaceType t);

}  // namespace biell
