#include "biell/surface.hpp"

#include <array>
#include <string>

namespace biell {

namespace {

// Audited classification data for the seven families, in type order:
// |G|, ord(omega_S), lambda, fiber multiplicities, |tor|, cyclic factors.
const std::array<SurfaceInvariants, 7> kInvariants = {{
    {2, 2, 1, {2, 2, 2, 2}, 4, {2, 2}},
    {4, 2, 2, {2, 2, 2, 2}, 2, {2}},
    {4, 4, 1, {2, 4, 4}, 2, {2}},
    {8, 4, 2, {2, 4, 4}, 1, {}},
    {3, 3, 1, {3, 3, 3}, 3, {3}},
    {9, 3, 3, {3, 3, 3}, 1, {}},
    {6, 6, 1, {2, 3, 6}, 1, {}},
}};

}  // namespace

const SurfaceInvariants& invariants(SurfaceType t) { return kInvariants[t.id() - 1]; }

SurfaceType type_from_orders(int canonical_order, int lambda) {
  for (int id = 1; id <= 7; ++id) {
    const auto& inv = kInvariants[id - 1];
    if (inv.canonical_order == canonical_order && inv.lambda == lambda) return SurfaceType(id);
  }
  throw precondition_error("no bielliptic family has ord(omega) = " +
                           std::to_string(canonical_order) + " and lambda = " +
                           std::to_string(lambda));
}

std::vector<CoverDescriptor> intermediate_covers(SurfaceType t) {
  const auto& inv = invariants(t);
  std::vector<CoverDescriptor> covers;

  // Canonical cover: degree ord(omega_S), A0 -> A, B0 -> (ord/lambda) B.
  covers.push_back({CoverKind::canonical, inv.canonical_order, 1,
                    inv.canonical_order / inv.lambda, std::nullopt, inv.lambda});

  // One intermediate bielliptic quotient per proper divisor d of ord(omega_S):
  // the target has canonical order ord/d and the same lambda, and B0 -> d B~0.
  for (int d = 2; d < inv.canonical_order; ++d) {
    if (inv.canonical_order % d != 0) continue;
    covers.push_back({CoverKind::order_quotient, d, 1, d,
                      type_from_orders(inv.canonical_order / d, inv.lambda), 1});
  }

  // Split cover when lambda > 1: degree lambda, target has lambda = 1 and the
  // same canonical order, and A0 -> lambda A~0.
  if (inv.lambda > 1) {
    covers.push_back({CoverKind::split, inv.lambda, inv.lambda, 1,
                      type_from_orders(inv.canonical_order, 1), 1});
  }
  return covers;
}

}  // namespace biell
