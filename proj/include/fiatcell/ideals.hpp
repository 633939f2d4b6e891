#pragma once

#include <cstddef>
#include <vector>

#include "fiatcell/green.hpp"
#include "fiatcell/matrix.hpp"
#include "fiatcell/shadow.hpp"

namespace fiatcell {

struct ThickIdeal {
  /// Pairwise ≤_J-incomparable two-sided cells (indices into the poset).
  std::vector<std::size_t> antichain;
  /// Union of all cells lying above some antichain member.
  ElementSet elements;
};

/// One thick ideal per antichain of the two-sided cell poset, starting with
/// the empty antichain; antichains are listed in lexicographic order.
std::vector<ThickIdeal> thick_ideals(const GreenStructure& g);
std::vector<ThickIdeal> thick_ideals(const Shadow& s);

/// Number of up-closed sets of cells, counted over all subsets. InputError
/// beyond 24 cells.
std::size_t upset_count(const CellPoset& poset);

/// Deletes an up-closed set U: surviving table entries lose their terms in
/// U. Objects whose identity lies in U disappear. The involution is kept
/// when U is closed under it. PreconditionError when U is not up-closed
/// (the message carries a witness pair) or would orphan a surviving element.
Shadow quotient_by_upset(const Shadow& s, const ElementSet& upset);

/// Decategorified cell module of a left cell L: matrices[a](h, f) is the
/// multiplicity of h in a ∘ f for h, f ∈ L, in the order of `basis`.
struct CellModuleMatrices {
  ElementSet basis;
  std::vector<IntMatrix> matrices;
};

CellModuleMatrices cell_module(const Shadow& s, const ElementSet& left_cell);

}  // namespace fiatcell
