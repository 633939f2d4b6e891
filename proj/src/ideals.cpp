#include "fiatcell/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "fiatcell/errors.hpp"

namespace fiatcell {

namespace {

void extend_antichains(const CellPoset& poset, std::size_t next, std::vector<std::size_t>& current,
                       std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t c = next; c < poset.cells.size(); ++c) {
    bool incomparable = std::all_of(current.begin(), current.end(), [&](std::size_t x) {
      return !poset.leq(x, c) && !poset.leq(c, x);
    });
    if (!incomparable) continue;
    current.push_back(c);
    out.push_back(current);
    extend_antichains(poset, c + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<ThickIdeal> thick_ideals(const GreenStructure& g) {
  const CellPoset& poset = g.poset();
  std::vector<std::vector<std::size_t>> antichains{{}};
  std::vector<std::size_t> current;
  extend_antichains(poset, 0, current, antichains);

  std::vector<ThickIdeal> out;
  out.reserve(antichains.size());
  for (auto& antichain : antichains) {
    ThickIdeal ideal;
    for (std::size_t c = 0; c < poset.cells.size(); ++c) {
      bool above = std::any_of(antichain.begin(), antichain.end(),
                               [&](std::size_t a) { return poset.leq(a, c); });
      if (above) ideal.elements.insert(ideal.elements.end(), poset.cells[c].begin(), poset.cells[c].end());
    }
    std::sort(ideal.elements.begin(), ideal.elements.end());
    ideal.antichain = std::move(antichain);
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<ThickIdeal> thick_ideals(const Shadow& s) { return thick_ideals(GreenStructure(s)); }

std::size_t upset_count(const CellPoset& poset) {
  const std::size_t cells = poset.cells.size();
  if (cells > 24) throw InputError("up-set enumeration limited to 24 cells");
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << cells); ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < cells && closed; ++x) {
      if (!(mask >> x & 1)) continue;
      for (std::size_t y = 0; y < cells; ++y)
        if (poset.leq(x, y) && !(mask >> y & 1)) {
          closed = false;
          break;
        }
    }
    if (closed) ++count;
  }
  return count;
}

Shadow quotient_by_upset(const Shadow& s, const ElementSet& upset) {
  const std::size_t n = s.size();
  std::vector<char> removed(n, 0);
  for (ElementId x : upset) {
    if (x >= n) throw InputError("element index out of range");
    removed[x] = 1;
  }
  if (!upset.empty()) {
    GreenStructure g(s);
    for (ElementId x : upset)
      for (ElementId y = 0; y < n; ++y)
        if (!removed[y] && g.leq(x, y, CellKind::two_sided))
          throw PreconditionError("set is not up-closed: " + s.element(x).name + " <=_J " +
                                  s.element(y).name + " but only the former is removed");
  }

  std::vector<int> objects;
  for (int o : s.objects()) {
    if (!removed[s.identity(o)]) {
      objects.push_back(o);
      continue;
    }
    for (ElementId a = 0; a < n; ++a) {
      const Element& e = s.element(a);
      if ((e.source == o || e.target == o) && !removed[a])
        throw PreconditionError("removing identity of object " + std::to_string(o) +
                                " would orphan " + e.name);
    }
  }

  std::vector<ElementId> new_id(n, n);
  std::vector<Element> elements;
  for (ElementId a = 0; a < n; ++a)
    if (!removed[a]) {
      new_id[a] = elements.size();
      elements.push_back(s.element(a));
    }

  std::vector<TableEntry> table;
  for (const TableEntry& entry : s.table()) {
    if (removed[entry.left] || removed[entry.right]) continue;
    TableEntry row;
    row.left = new_id[entry.left];
    row.right = new_id[entry.right];
    row.truncated = entry.truncated;
    for (const auto& [c, m] : entry.result.terms())
      if (!removed[c]) row.result.add(new_id[c], m);
    table.push_back(std::move(row));
  }

  std::optional<std::vector<ElementId>> involution;
  if (s.has_involution()) {
    bool closed = true;
    for (ElementId a = 0; a < n; ++a)
      if (removed[a] != removed[s.star(a)]) closed = false;
    if (closed) {
      std::vector<ElementId> inv;
      for (ElementId a = 0; a < n; ++a)
        if (!removed[a]) inv.push_back(new_id[s.star(a)]);
      involution = std::move(inv);
    }
  }
  return Shadow(std::move(objects), std::move(elements), std::move(table), std::move(involution),
                s.partial());
}

CellModuleMatrices cell_module(const Shadow& s, const ElementSet& left_cell) {
  if (left_cell.empty()) throw PreconditionError("cell module of an empty set");
  GreenStructure g(s);
  const CellPartition& lefts = g.cells(CellKind::left);
  ElementSet sorted = left_cell;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= s.size() || lefts.classes[lefts.class_of[sorted.front()]] != sorted)
    throw PreconditionError("not a left cell");

  CellModuleMatrices out;
  out.basis = sorted;
  const std::size_t k = sorted.size();
  std::map<ElementId, std::size_t> position;
  for (std::size_t i = 0; i < k; ++i) position[sorted[i]] = i;

  out.matrices.reserve(s.size());
  for (ElementId a = 0; a < s.size(); ++a) {
    IntMatrix m(k, k);
    for (std::size_t col = 0; col < k; ++col) {
      for (const auto& [h, mult] : s.product(a, sorted[col]).terms()) {
        auto it = position.find(h);
        if (it != position.end()) m(it->second, col) = static_cast<std::int64_t>(mult);
      }
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

}  // namespace fiatcell
