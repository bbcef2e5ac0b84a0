#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biell/lattice.hpp"
#include "biell/surface.hpp"

namespace biell {

/// Candidate numerical vector of an Ulrich bundle with respect to H.
/// For primitive H the candidates of rank r are indexed by r <= k <= 2r;
/// for divisible H some lattice points on the defining segment carry no
/// integer index and k is left unset.
struct UlrichCandidate {
  std::int64_t rank = 0;
  std::optional<std::int64_t> k;
  MukaiVector v;
};

/// (r, k a A0 + (3r-k) b B0, 2rab) for H = (a, b). Requires r >= 1 and
/// r <= k <= 2r.
MukaiVector ulrich_vector(std::int64_t r, std::int64_t k, const Polarization& h);

/// The r+1 candidates k = r..2r for ample H with gcd(a, b) = 1. A divisible
/// polarization is routed to enumerate_candidates_divisible.
std::vector<UlrichCandidate> enumerate_candidates(const Polarization& h, std::int64_t r);

/// All lattice points (x, y) >= 0 on the line x*b + y*a = r*a*b, shifted by
/// e^H. With g = gcd(a, b) there are r*g + 1 of them; g = 1 recovers
/// enumerate_candidates.
std::vector<UlrichCandidate> enumerate_candidates_divisible(const Polarization& h, std::int64_t r);

enum class UlrichStatus { exists, not_exists, unknown };

const char* to_string(UlrichStatus s);

/// Hypotheses under which existence verdicts are quotable. decide() refuses
/// to run when any is withdrawn.
struct UlrichAssumptions {
  bool b_at_least_lambda = true;  // polarization (a,b) has b >= lambda_S
  bool h_primitive = true;        // gcd(a,b) = 1
  bool h_generic = true;          // H on no wall for the queried vector
};

struct FactKey {
  std::int64_t r = 0;
  std::int64_t k = 0;
  auto operator<=>(const FactKey&) const = default;
};

struct CertificateStep {
  std::string rule;  // B1..B5, C1, C2
  std::string cite;
  FactKey fact;
  UlrichStatus status = UlrichStatus::unknown;
  std::vector<FactKey> premises;
};

struct UlrichVerdict {
  UlrichStatus status = UlrichStatus::unknown;
  UlrichAssumptions assumptions;
  std::vector<CertificateStep> certificate;  // derivation in topological order
};

struct SaturationOptions {
  // Permutes the rule-application order; verdicts must not depend on it.
  std::optional<unsigned> shuffle_seed;
};

struct FactTable {
  int type_id = 0;
  std::int64_t max_rank = 0;
  std::map<FactKey, CertificateStep> facts;
};

/// Saturates base facts under duality (C1) and direct sums (C2) for all
/// indices of rank <= max_rank. Existence facts never propagate through
/// a NOT_EXISTS premise; NOT_EXISTS propagates only through C1.
FactTable saturate(SurfaceType t, std::int64_t max_rank, const SaturationOptions& opts = {});

/// Verdict for v_Ulrich(r, k) on a surface of type t, with a replayable
/// certificate. Unreached indices are UNKNOWN. Throws when k is out of range
/// or an assumption is withdrawn.
UlrichVerdict decide(SurfaceType t, std::int64_t r, std::int64_t k,
                     const UlrichAssumptions& assumptions = {});

/// Re-derives the verdict from its certificate alone, checking every step
/// against the rule definitions. UNKNOWN verdicts are replayed by
/// re-saturating and confirming absence.
bool replay(const UlrichVerdict& verdict, SurfaceType t, std::int64_t r, std::int64_t k);

/// A concrete index (r, k) with an EXISTS verdict, for any type and any
/// r >= 2; the vector is attached for the given polarization. Throws if no
/// witness is derivable (which the tests show never happens for r >= 2).
UlrichCandidate every_rank_witness(SurfaceType t, std::int64_t r,
                                   const Polarization& h = Polarization{{1, 3}});

}  // namespace biell
