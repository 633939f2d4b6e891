#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fiatcell/report.hpp"
#include "fiatcell/shadow.hpp"

/// The Clebsch–Gordan multisemigroup on the nonnegative integers and its
/// finite windows {0..K}.
namespace fiatcell::clebsch {

using Value = std::uint64_t;

/// {x : |m-n| <= x <= m+n, x ≡ m+n mod 2}, ascending.
std::vector<Value> cg_op(Value m, Value n);

/// Set product X ⋄ Y, sorted and duplicate-free.
std::vector<Value> cg_sets(const std::vector<Value>& x, const std::vector<Value>& y);

/// One-object partial shadow on {0..K}, elements named "0".."K" with "0" the
/// identity. Entries with a+b > K keep their part <= K and are truncated.
Shadow window_shadow(Value max);

struct SingleCellResult {
  bool passed = true;
  std::size_t pairs = 0;
  /// First (a, b) for which b ∉ cg_op(a+b, a).
  std::vector<std::pair<Value, Value>> failures;
};

/// For all a, b <= K: b ∈ cg_op(a+b, a), so every element reaches every
/// other; independent of any window table.
SingleCellResult single_cell_check(Value max);

struct AssociativityResult {
  bool passed = true;
  std::size_t triples = 0;
  std::vector<std::array<Value, 3>> failures;
};

/// (a⋄b)⋄c = a⋄(b⋄c) as sets for all a, b, c <= K, evaluated without a window.
AssociativityResult unbounded_associativity(Value max);

/// Commutativity, strict unit, unbounded associativity, window associativity
/// on complete triples, single cell in all three kinds.
Report verify_clebsch(Value max = 25);

}  // namespace fiatcell::clebsch
