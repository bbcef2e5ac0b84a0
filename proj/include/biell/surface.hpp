#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "biell/errors.hpp"

namespace biell {

/// One of the seven Bagnera-de Franchis families, identified by its
/// classical index 1..7.
class SurfaceType {
 public:
  explicit SurfaceType(int id) : id_(id) {
    if (id < 1 || id > 7) throw precondition_error("surface type id must be in 1..7");
  }
  int id() const { return id_; }
  friend bool operator==(SurfaceType lhs, SurfaceType rhs) { return lhs.id_ == rhs.id_; }

 private:
  int id_;
};

/// Discrete invariants of one family.
struct SurfaceInvariants {
  int group_order;                     // |G|
  int canonical_order;                 // ord(omega_S)
  int lambda;                          // |G| / ord(omega_S)
  std::vector<int> multiplicities;     // multiple fibers of the fibration over P^1
  int torsion_order;                   // |H^2(S,Z)_tor|
  std::vector<int> torsion_structure;  // cyclic factors, empty when torsion-free
};

const SurfaceInvariants& invariants(SurfaceType t);

/// Family with the given canonical order and lambda; the pair determines the
/// type uniquely. Throws if no family matches.
SurfaceType type_from_orders(int canonical_order, int lambda);

enum class CoverKind { canonical, order_quotient, split };

/// An etale cover S~ -> S together with its action on (A0, B0) coordinates:
/// A0 pulls back to pullback_a * A~0 and B0 to pullback_b * B~0.
///
/// pairing_scale is the intersection number A~0 . B~0 on the target. It is 1
/// for a bielliptic target and lambda_S for the abelian canonical cover
/// (the two fiber classes there meet in lambda_S points).
struct CoverDescriptor {
  CoverKind kind;
  int degree;
  std::int64_t pullback_a;
  std::int64_t pullback_b;
  std::optional<SurfaceType> target;  // nullopt: abelian canonical cover
  std::int64_t pairing_scale;
};

/// Canonical cover first, then one order-quotient cover per proper divisor of
/// ord(omega_S) in increasing degree, then the split cover when lambda > 1.
std::vector<CoverDescriptor> intermediate_covers(SurfaceType t);

}  // namespace biell
