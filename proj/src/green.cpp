#include "fiatcell/green.hpp"

#include <algorithm>
#include <sstream>

#include "fiatcell/errors.hpp"

namespace fiatcell {

std::string to_string(CellKind kind) {
  switch (kind) {
    case CellKind::left: return "left";
    case CellKind::right: return "right";
    case CellKind::two_sided: return "two-sided";
  }
  return "?";
}

CellKind parse_cell_kind(const std::string& text) {
  if (text == "left") return CellKind::left;
  if (text == "right") return CellKind::right;
  if (text == "two-sided") return CellKind::two_sided;
  throw InputError("unknown cell kind '" + text + "' (expected left, right or two-sided)");
}

namespace {

using Mask = std::vector<char>;

ElementSet to_set(const Mask& mask) {
  ElementSet out;
  for (ElementId i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

void add_support(Mask& mask, const Decomposition& d) {
  for (const auto& term : d.terms()) mask[term.first] = 1;
}

Mask left_mask(const Shadow& s, ElementId a) {
  Mask mask(s.size(), 0);
  mask[a] = 1;
  for (ElementId x = 0; x < s.size(); ++x) add_support(mask, s.product(x, a));
  return mask;
}

Mask right_mask(const Shadow& s, ElementId a) {
  Mask mask(s.size(), 0);
  mask[a] = 1;
  for (ElementId y = 0; y < s.size(); ++y) add_support(mask, s.product(a, y));
  return mask;
}

Mask two_sided_mask(const Shadow& s, ElementId a) {
  Mask left = left_mask(s, a);
  Mask mask = left;
  for (ElementId z = 0; z < s.size(); ++z) {
    if (!left[z]) continue;
    for (ElementId y = 0; y < s.size(); ++y) add_support(mask, s.product(z, y));
  }
  return mask;
}

Mask ideal_mask(const Shadow& s, ElementId a, CellKind kind) {
  switch (kind) {
    case CellKind::left: return left_mask(s, a);
    case CellKind::right: return right_mask(s, a);
    case CellKind::two_sided: return two_sided_mask(s, a);
  }
  return {};
}

std::size_t kind_index(CellKind kind) { return static_cast<std::size_t>(kind); }

void check_id(const Shadow& s, ElementId a) {
  if (a >= s.size()) throw InputError("element index out of range");
}

CellPartition partition_from_order(CellKind kind, const std::vector<std::vector<char>>& order) {
  const std::size_t n = order.size();
  CellPartition p;
  p.kind = kind;
  p.class_of.assign(n, n);
  for (ElementId a = 0; a < n; ++a) {
    if (p.class_of[a] != n) continue;
    ElementSet cls;
    for (ElementId b = a; b < n; ++b)
      if (order[a][b] && order[b][a]) {
        cls.push_back(b);
        p.class_of[b] = p.classes.size();
      }
    p.classes.push_back(std::move(cls));
  }
  return p;
}

}  // namespace

ElementSet compose_sets(const Shadow& s, const ElementSet& x, const ElementSet& y) {
  Mask mask(s.size(), 0);
  for (ElementId a : x) {
    check_id(s, a);
    for (ElementId b : y) {
      check_id(s, b);
      add_support(mask, s.product(a, b));
    }
  }
  return to_set(mask);
}

ElementSet principal_ideal(const Shadow& s, ElementId a, CellKind kind) {
  check_id(s, a);
  return to_set(ideal_mask(s, a, kind));
}

bool leq(const Shadow& s, ElementId a, ElementId b, CellKind kind) {
  check_id(s, a);
  check_id(s, b);
  Mask ia = ideal_mask(s, a, kind);
  Mask ib = ideal_mask(s, b, kind);
  for (ElementId i = 0; i < s.size(); ++i)
    if (ib[i] && !ia[i]) return false;
  return true;
}

GreenStructure::GreenStructure(const Shadow& s, std::size_t workers) : shadow_(&s) {
  const std::size_t n = s.size();
  for (CellKind kind : {CellKind::left, CellKind::right, CellKind::two_sided}) {
    std::size_t k = kind_index(kind);
    std::vector<Mask> masks(n);
    parallel_for(n, [&](std::size_t a) { masks[a] = ideal_mask(s, a, kind); }, workers);
    ideals_[k].resize(n);
    for (ElementId a = 0; a < n; ++a) ideals_[k][a] = to_set(masks[a]);

    auto& order = order_[k];
    order.assign(n, std::vector<char>(n, 0));
    parallel_for(
        n,
        [&](std::size_t a) {
          for (ElementId b = 0; b < n; ++b) {
            bool contained = true;
            for (ElementId x : ideals_[k][b])
              if (!masks[a][x]) {
                contained = false;
                break;
              }
            order[a][b] = contained ? 1 : 0;
          }
        },
        workers);
    partitions_[k] = partition_from_order(kind, order);
  }

  const CellPartition& cells = partitions_[kind_index(CellKind::two_sided)];
  const auto& order = order_[kind_index(CellKind::two_sided)];
  const std::size_t m = cells.size();
  poset_.cells = cells.classes;
  poset_.below.assign(m, std::vector<char>(m, 0));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      poset_.below[x][y] = order[cells.classes[x].front()][cells.classes[y].front()];
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y || !poset_.below[x][y]) continue;
      bool covered = true;
      for (std::size_t z = 0; z < m && covered; ++z)
        if (z != x && z != y && poset_.below[x][z] && poset_.below[z][y]) covered = false;
      if (covered) poset_.covers.emplace_back(x, y);
    }
}

const ElementSet& GreenStructure::ideal(ElementId a, CellKind kind) const {
  return ideals_[kind_index(kind)].at(a);
}

bool GreenStructure::leq(ElementId a, ElementId b, CellKind kind) const {
  return order_[kind_index(kind)].at(a).at(b) != 0;
}

const CellPartition& GreenStructure::cells(CellKind kind) const {
  return partitions_[kind_index(kind)];
}

CellPartition cell_partition(const Shadow& s, CellKind kind) {
  return GreenStructure(s).cells(kind);
}

CellPoset cell_poset(const Shadow& s) { return GreenStructure(s).poset(); }

std::string poset_to_dot(const Shadow& s, const CellPoset& poset) {
  std::ostringstream os;
  os << "digraph cells {\n";
  for (std::size_t x = 0; x < poset.cells.size(); ++x) {
    os << "  c" << x << " [label=\"";
    for (std::size_t i = 0; i < poset.cells[x].size(); ++i) {
      if (i) os << ", ";
      os << s.element(poset.cells[x][i]).name;
    }
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

RegularityCheck is_strongly_regular(const GreenStructure& g, std::size_t two_sided_cell) {
  const Shadow& s = g.shadow();
  const ElementSet& cell = g.cells(CellKind::two_sided).classes.at(two_sided_cell);
  std::vector<std::size_t> lefts, rights;
  for (ElementId a : cell) {
    lefts.push_back(g.cell_of(a, CellKind::left));
    rights.push_back(g.cell_of(a, CellKind::right));
  }
  auto unique_sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  std::vector<std::size_t> left_cells = unique_sorted(lefts);
  std::vector<std::size_t> right_cells = unique_sorted(rights);

  const auto& left_classes = g.cells(CellKind::left).classes;
  const auto& right_classes = g.cells(CellKind::right).classes;
  auto name = [&](const ElementSet& cls) { return s.element(cls.front()).name; };

  for (std::size_t x : left_cells)
    for (std::size_t y : left_cells) {
      if (x == y) continue;
      if (g.leq(left_classes[x].front(), left_classes[y].front(), CellKind::left))
        return {false, "left cells of " + name(left_classes[x]) + " and " +
                           name(left_classes[y]) + " are comparable"};
    }
  for (std::size_t x : left_cells)
    for (std::size_t y : right_cells) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < cell.size(); ++i)
        if (lefts[i] == x && rights[i] == y) ++count;
      if (count != 1)
        return {false, "left cell of " + name(left_classes[x]) + " meets right cell of " +
                           name(right_classes[y]) + " in " + std::to_string(count) + " elements"};
    }
  return {true, ""};
}

MValues m_values(const GreenStructure& g, std::size_t two_sided_cell) {
  const Shadow& s = g.shadow();
  if (!s.has_involution()) throw PreconditionError("m-values need a shadow with an involution");
  const ElementSet& cell = g.cells(CellKind::two_sided).classes.at(two_sided_cell);
  RegularityCheck reg = is_strongly_regular(g, two_sided_cell);
  if (!reg.strongly_regular)
    throw PreconditionError("two-sided cell of " + s.element(cell.front()).name +
                            " is not strongly regular: " + reg.witness);

  MValues out;
  for (ElementId f : cell) {
    ElementId fs = s.star(f);
    std::size_t lf = g.cell_of(f, CellKind::left);
    std::size_t rfs = g.cell_of(fs, CellKind::right);
    std::optional<ElementId> h;
    for (ElementId x : cell)
      if (g.cell_of(x, CellKind::left) == lf && g.cell_of(x, CellKind::right) == rfs) h = x;
    if (!h)
      throw PreconditionError("no element in left cell of " + s.element(f).name +
                              " and right cell of its adjoint");
    out.h[f] = *h;
    out.m[f] = s.product(fs, f).multiplicity(*h);
  }
  std::map<std::size_t, Multiplicity> per_right;
  for (ElementId f : cell) {
    std::size_t r = g.cell_of(f, CellKind::right);
    auto [it, inserted] = per_right.emplace(r, out.m[f]);
    if (!inserted && it->second != out.m[f] && out.constant_on_right_cells) {
      out.constant_on_right_cells = false;
      out.witness = "m differs on right cell of " + s.element(f).name + ": " +
                    std::to_string(it->second) + " vs " + std::to_string(out.m[f]);
    }
  }
  return out;
}

}  // namespace fiatcell
