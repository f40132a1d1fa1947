#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxkit/coxeter_system.hpp"
#include "coxkit/group_table.hpp"

namespace coxkit {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;  // number of individual assertions made
  std::string counterexample;
};

struct StructureReport {
  std::string system;
  std::vector<CheckResult> checks;
  bool ok() const;
  std::size_t failures() const;
};

struct StructureOptions {
  /// Translation invariance is exhaustive up to this group order and uses
  /// `translation_samples` evenly spaced elements above it.
  std::size_t exhaustive_translation_limit = 384;
  std::size_t translation_samples = 64;
};

/// Machine-checks, for every applicable order: strict nesting, duality,
/// Schur-product closure on generator pairs, left-translation invariance,
/// both extension bases, the degenerate orders, and even weights below m.
StructureReport structural_verify(const GroupTable& table, const CoxeterSystem& system,
                                  const StructureOptions& options = {});

}  // namespace coxkit
