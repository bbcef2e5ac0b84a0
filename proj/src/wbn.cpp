#include "biell/wbn.hpp"

#include <cstdlib>

namespace biell {

namespace {

CohomologyVector known(std::int64_t h0, std::int64_t h1, std::int64_t h2) {
  return {h0, h1, h2};
}

// h0 and h1 not established, h2 = 0 (dual class is not effective).
CohomologyVector open_below_h2() { return {std::nullopt, std::nullopt, 0}; }

CohomologyVector reversed(CohomologyVector h) { return {h.h2, h.h1, h.h0}; }

// Generic cohomology of the component for class (0, b), b > 0. The fiber
// class pushes down to a degree-(b/lambda) bundle on the base when
// lambda | b; torsion-twisted components vanish generically; small b on
// non-split surfaces vanishes through the canonical-cover bound.
CohomologyVector fiber_class_cohomology(SurfaceType t, std::int64_t b, int comp_index) {
  const auto& inv = invariants(t);
  const int lam = inv.lambda;
  switch (t.id()) {
    case 1:
    case 3:
    case 5:
      return comp_index == 0 ? known(b, b, 0) : known(0, 0, 0);
    case 2:
      if (comp_index != 0) return known(0, 0, 0);
      if (b % 2 == 0) return known(b / 2, b / 2, 0);
      if (b < lam) return known(0, 0, 0);
      return open_below_h2();
    default:  // 4, 6, 7: torsion-free, single component
      if (b % lam == 0) return known(b / lam, b / lam, 0);
      if (b < lam) return known(0, 0, 0);
      return open_below_h2();
  }
}

WbnStatus component_status(const CohomologyVector& h) {
  int known_nonzero = 0;
  for (const auto& entry : {h.h0, h.h1, h.h2})
    if (entry && *entry != 0) ++known_nonzero;
  if (known_nonzero >= 2) return WbnStatus::fails;
  if (h.fully_known()) return WbnStatus::satisfied;
  return WbnStatus::unknown;
}

}  // namespace

const char* to_string(WbnStatus s) {
  switch (s) {
    case WbnStatus::satisfied: return "SATISFIED";
    case WbnStatus::fails: return "FAILS";
    default: return "UNKNOWN";
  }
}

const char* to_string(ModuliStatus s) {
  return s == ModuliStatus::satisfied ? "SATISFIED" : "FAILS";
}

CohomologyVector generic_cohomology(SurfaceType t, NumClass cls, TorsionComponent comp) {
  const auto& inv = invariants(t);
  if (comp.index < 0 || comp.index >= inv.torsion_order)
    throw precondition_error("torsion component index out of range for this type");

  const std::int64_t a = cls.a, b = cls.b;
  if (a > 0 && b > 0) return known(a * b, 0, 0);       // ample: higher cohomology vanishes
  if (a < 0 && b < 0) return known(0, 0, a * b);       // Serre dual of the ample case
  if (a != 0 && b != 0) return known(0, -(a * b), 0);  // mixed signs: nothing effective either way
  if (a == 0 && b == 0) return known(0, 0, 0);         // generic member of any component
  if (b == 0) return known(0, 0, 0);                   // class (a, 0): generic vanishing, all components
  if (b < 0) return reversed(generic_cohomology(t, {0, -b}, comp));
  return fiber_class_cohomology(t, b, comp.index);
}

WbnReport wbn(SurfaceType t, NumClass cls) {
  const auto& inv = invariants(t);
  WbnReport rep{t, cls, {}, ModuliStatus::satisfied,
                "line-bundle-wbn-classification (generic member per Picard component)"};
  for (int i = 0; i < inv.torsion_order; ++i) {
    CohomologyVector h = generic_cohomology(t, cls, {i});
    rep.components.push_back({i, h, component_status(h)});
  }
  const bool torsion_free = inv.torsion_order == 1;
  if (torsion_free && cls.a == 0 && std::llabs(cls.b) >= inv.lambda)
    rep.moduli = ModuliStatus::fails;
  return rep;
}

bool cover_bound_check(SurfaceType t, std::int64_t pullback_h) {
  if (pullback_h < 0) throw precondition_error("cover bound check requires a dimension >= 0");
  return pullback_h <= invariants(t).canonical_order - 1;
}

}  // namespace biell
