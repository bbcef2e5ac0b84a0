#pragma once

#include <span>
#include <string>
#include <vector>

#include "biell/surface.hpp"

namespace biell {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> notes;  // one entry per failed check

  bool passed() const { return failures == 0; }
};

/// Consistency of a seven-row invariant table: lambda * ord = |G|,
/// lcm of multiplicities = ord, sum(1 - 1/m_i) = 2, torsion order matches
/// its cyclic factors, (ord, lambda) pairs distinct. Exposed with an
/// explicit table so the test harness can feed corrupted rows.
SuiteResult run_surface_table_suite(std::span<const SurfaceInvariants, 7> table);
SuiteResult run_surface_table_suite();

SuiteResult run_lattice_suite();
SuiteResult run_wbn_suite();
SuiteResult run_walls_suite();
SuiteResult run_ulrich_suite();
SuiteResult run_irr_suite();

/// All suites, or the single named one. Throws on an unknown suite name.
std::vector<SuiteResult> run_selftests(const std::string& only_suite = "");

}  // namespace biell
