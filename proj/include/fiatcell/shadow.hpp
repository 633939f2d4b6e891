#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fiatcell {

/// Position of an element inside its shadow. Ordering by ElementId is the
/// tie-break used for every deterministic output.
using ElementId = std::size_t;
using Multiplicity = std::uint64_t;

/// An isomorphism class of indecomposable 1-morphisms. `source`/`target` are
/// object labels from Shadow::objects().
struct Element {
  std::string name;
  int source = 0;
  int target = 0;
  bool identity = false;

  bool operator==(const Element&) const = default;
};

/// A formal sum of elements with positive multiplicities. The empty
/// decomposition is the formal zero.
class Decomposition {
 public:
  using Term = std::pair<ElementId, Multiplicity>;

  Decomposition() = default;
  static Decomposition single(ElementId e, Multiplicity m = 1);

  void add(ElementId e, Multiplicity m);
  void add(const Decomposition& other, Multiplicity scale = 1);

  Multiplicity multiplicity(ElementId e) const;
  bool contains(ElementId e) const { return multiplicity(e) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms sorted by element id.
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<ElementId> support() const;

  bool operator==(const Decomposition&) const = default;

 private:
  std::vector<Term> terms_;
};

/// One row of a composition table: left ∘ right, i.e. `right` applied first.
struct TableEntry {
  ElementId left = 0;
  ElementId right = 0;
  Decomposition result;
  /// Only meaningful in partial shadows: the true product leaves the finite
  /// window and `result` is its restriction.
  bool truncated = false;
};

/// A finite typed multisemigroup with multiplicities: the decategorified
/// shadow of a finitary 2-category.
///
/// compose(a, b) is "a after b" and is defined iff source(a) == target(b).
/// The constructor validates every axiom (complete table on composable
/// pairs, typed results, strict identities, involution laws) and throws
/// StructureError on the first violation. Instances are immutable.
class Shadow {
 public:
  Shadow() = default;
  Shadow(std::vector<int> objects, std::vector<Element> elements,
         std::vector<TableEntry> table,
         std::optional<std::vector<ElementId>> involution = std::nullopt,
         bool partial = false);

  const std::vector<int>& objects() const { return objects_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(ElementId id) const { return elements_.at(id); }

  std::optional<ElementId> find(const std::string& name) const;
  /// Throws InputError for unknown names.
  ElementId at(const std::string& name) const;

  ElementId identity(int object) const;

  bool composable(ElementId a, ElementId b) const {
    return elements_[a].source == elements_[b].target;
  }
  /// Table entry for a ∘ b; the empty decomposition when not composable.
  const Decomposition& product(ElementId a, ElementId b) const;
  bool truncated(ElementId a, ElementId b) const { return truncated_[a * size() + b] != 0; }

  bool partial() const { return partial_; }
  bool has_involution() const { return involution_.has_value(); }
  const std::optional<std::vector<ElementId>>& involution() const { return involution_; }
  /// Image under the involution; throws PreconditionError when absent.
  ElementId star(ElementId a) const;

  /// Table entries in (left, right) order over composable pairs.
  std::vector<TableEntry> table() const;

  bool operator==(const Shadow& other) const;

 private:
  void validate_structure(const std::vector<TableEntry>& table);
  void validate_involution() const;

  std::vector<int> objects_;
  std::vector<Element> elements_;
  std::map<std::string, ElementId> index_;
  std::vector<Decomposition> products_;
  std::vector<char> truncated_;
  std::vector<ElementId> identities_;
  std::optional<std::vector<ElementId>> involution_;
  bool partial_ = false;
};

/// Checked a ∘ b: InputError for ids outside the shadow, the empty
/// decomposition when the pair is not composable.
const Decomposition& compose(const Shadow& s, ElementId a, ElementId b);
Decomposition compose(const Shadow& s, const std::string& a, const std::string& b);

/// Linear extension of the product: Σ mult(x)·mult(y)·(x ∘ y).
Decomposition compose(const Shadow& s, const Decomposition& x, const Decomposition& y);

/// Writes "2·a + b" style text, "0" for the empty decomposition.
std::string to_string(const Shadow& s, const Decomposition& d);

}  // namespace fiatcell
