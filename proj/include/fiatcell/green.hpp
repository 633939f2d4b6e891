#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fiatcell/parallel.hpp"
#include "fiatcell/shadow.hpp"

namespace fiatcell {

enum class CellKind { left, right, two_sided };

std::string to_string(CellKind kind);
/// Accepts "left", "right", "two-sided"; InputError otherwise.
CellKind parse_cell_kind(const std::string& text);

/// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

/// Boolean extension X * Y: union of the supports of x ∘ y.
ElementSet compose_sets(const Shadow& s, const ElementSet& x, const ElementSet& y);

/// S¹∘a, a∘S¹ or S¹∘a∘S¹. The generator itself is always included, which
/// realizes the adjoined unit without materializing it.
ElementSet principal_ideal(const Shadow& s, ElementId a, CellKind kind);

/// a ≤ b iff the principal ideal of b is contained in that of a. Larger
/// elements generate smaller ideals.
bool leq(const Shadow& s, ElementId a, ElementId b, CellKind kind);

struct CellPartition {
  CellKind kind = CellKind::two_sided;
  /// Classes ordered by their smallest member.
  std::vector<ElementSet> classes;
  /// class_of[e] is the index of the class containing e.
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

/// Two-sided cells with the partial order induced by ≤_J.
struct CellPoset {
  std::vector<ElementSet> cells;
  /// below[x][y] != 0 iff cell x ≤_J cell y.
  std::vector<std::vector<char>> below;
  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  bool leq(std::size_t x, std::size_t y) const { return below[x][y] != 0; }
};

/// All three Green preorders of a shadow, precomputed from principal ideals.
class GreenStructure {
 public:
  explicit GreenStructure(const Shadow& s, std::size_t workers = worker_count());

  const Shadow& shadow() const { return *shadow_; }
  const ElementSet& ideal(ElementId a, CellKind kind) const;
  bool leq(ElementId a, ElementId b, CellKind kind) const;
  const CellPartition& cells(CellKind kind) const;
  std::size_t cell_of(ElementId a, CellKind kind) const { return cells(kind).class_of[a]; }
  const CellPoset& poset() const { return poset_; }

 private:
  const Shadow* shadow_;
  std::vector<ElementSet> ideals_[3];
  std::vector<std::vector<char>> order_[3];
  CellPartition partitions_[3];
  CellPoset poset_;
};

CellPartition cell_partition(const Shadow& s, CellKind kind);
CellPoset cell_poset(const Shadow& s);

/// DOT rendering: one node per cell labelled with its members, one edge per
/// covering relation drawn from the lower cell to the upper one.
std::string poset_to_dot(const Shadow& s, const CellPoset& poset);

struct RegularityCheck {
  bool strongly_regular = false;
  /// Empty when regular; otherwise names the offending pair of cells.
  std::string witness;
};

/// Left cells of J pairwise ≤_L-incomparable, and every left cell meets
/// every right cell of J in exactly one element.
RegularityCheck is_strongly_regular(const GreenStructure& g, std::size_t two_sided_cell);

struct MValues {
  /// m_F for each F in the cell.
  std::map<ElementId, Multiplicity> m;
  /// The distinguished H in (left cell of F) ∩ (right cell of F*).
  std::map<ElementId, ElementId> h;
  /// True iff F ↦ m_F is constant on every right cell of the two-sided cell.
  bool constant_on_right_cells = true;
  std::string witness;
};

/// Requires an involution and a strongly regular cell; PreconditionError
/// otherwise.
MValues m_values(const GreenStructure& g, std::size_t two_sided_cell);

}  // namespace fiatcell
