#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biell/lattice.hpp"
#include "biell/surface.hpp"

namespace biell {

/// Named arithmetic checks behind the degree-3 map construction. The
/// sheaf-theoretic steps enter as citation strings, never as computations.
struct IrrChecks {
  bool d_squared_is_12 = false;
  bool v_isotropic = false;
  bool chi_is_3 = false;
  bool l_v_is_1 = false;
  bool d12_primitive = false;
  std::string h2_vanishes_reason;
};

struct IrrCertificate {
  SurfaceType type;
  NumClass d;      // 3A0 + 2B0
  MukaiVector v;   // (2, d, 3)
  IrrChecks checks;
  std::int64_t degree_bound = 0;  // c2 = d^2/2 - s
};

/// Runs every arithmetic check of the rank-2 construction for type t.
/// Throws naming the first failed check (none fails for the seven types).
IrrCertificate build_certificate(SurfaceType t);

struct IrrResult {
  int lower = 0;
  int upper = 0;
  std::optional<int> value;
  std::vector<std::string> citations;
};

/// Degree of irrationality: 2 for types 1 and 2, otherwise 3.
IrrResult irr(SurfaceType t);

/// Primitivity of a class with d^2 = 12; every such class is primitive
/// because n = 2 would force an odd square in an even lattice. Throws when
/// d^2 != 12.
bool check_deg12_primitive(NumClass d);

struct MinimalityRow {
  std::int64_t d_squared = 0;
  std::int64_t s = 0;
  bool feasible = false;  // rank-2 Bogomolov: d^2 - 4s >= 0
  std::optional<std::int64_t> c2;
};

struct MinimalityReport {
  std::vector<MinimalityRow> rows;
  std::int64_t best_d_squared = 0;
  std::int64_t best_s = 0;
  std::int64_t best_c2 = 0;
};

/// Scans even d^2 in 2..40 and s >= 3 under d^2 - 4s >= 0 and reports the
/// minimizer of c2 = d^2/2 - s, which is (12, 3) with c2 = 3.
MinimalityReport minimality_check();

}  // namespace biell
