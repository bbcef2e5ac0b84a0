#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biell/lattice.hpp"
#include "biell/surface.hpp"

namespace biell {

/// Connected component of the Picard scheme with fixed numerical class,
/// indexed by the torsion twist. Index 0 is the untwisted component (the
/// determinant differs from a genuine divisor class by Pic^0 only).
struct TorsionComponent {
  int index = 0;
};

/// Generic cohomology of a line bundle; entries left unset where no value is
/// established.
struct CohomologyVector {
  std::optional<std::int64_t> h0;
  std::optional<std::int64_t> h1;
  std::optional<std::int64_t> h2;

  bool fully_known() const { return h0 && h1 && h2; }
  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

enum class WbnStatus { satisfied, fails, unknown };
enum class ModuliStatus { satisfied, fails };

const char* to_string(WbnStatus s);
const char* to_string(ModuliStatus s);

/// Cohomology (h0, h1, h2) of the generic member of the given Picard
/// component. Throws on an out-of-range component index.
CohomologyVector generic_cohomology(SurfaceType t, NumClass cls, TorsionComponent comp);

struct ComponentReport {
  int index = 0;
  CohomologyVector h;
  WbnStatus status = WbnStatus::unknown;
};

struct WbnReport {
  SurfaceType type;
  NumClass cls;
  std::vector<ComponentReport> components;
  ModuliStatus moduli = ModuliStatus::satisfied;
  std::string citation;
};

/// Weak Brill-Noether report: per-component generic cohomology and status,
/// plus the moduli-level verdict. The moduli level fails exactly for types
/// 4, 6, 7 on classes (0, b) with |b| >= lambda_S.
WbnReport wbn(SurfaceType t, NumClass cls);

/// True iff a cohomology group of the given dimension on the canonical cover
/// forces generic vanishing downstairs, i.e. pullback_h <= ord(omega_S) - 1.
bool cover_bound_check(SurfaceType t, std::int64_t pullback_h);

}  // namespace biell
