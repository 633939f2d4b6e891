#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "fiatcell/parallel.hpp"
#include "fiatcell/shadow.hpp"

namespace fiatcell {

struct AssociativityReport {
  /// Multiplicity-level identity (ab)c = a(bc) on every checked triple.
  bool passed = true;
  /// Set-level identity on supports, which is implied by the above.
  bool set_level_passed = true;
  std::size_t triples_checked = 0;
  /// Triples touching a truncated entry of a partial shadow.
  std::size_t triples_skipped = 0;
  /// First failing triple (a, b, c) in lexicographic id order.
  std::optional<std::array<ElementId, 3>> failure;
  Decomposition lhs;
  Decomposition rhs;
};

/// Exhaustive check over all composable triples. Partitioned by the first
/// factor across workers; the result is schedule-independent.
AssociativityReport check_associativity(const Shadow& s, std::size_t workers = worker_count());

}  // namespace fiatcell
