#include "fiatcell/clebsch.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fiatcell/checks.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"

namespace fiatcell::clebsch {

std::vector<Value> cg_op(Value m, Value n) {
  std::vector<Value> out;
  for (Value x = m > n ? m - n : n - m; x <= m + n; x += 2) out.push_back(x);
  return out;
}

std::vector<Value> cg_sets(const std::vector<Value>& x, const std::vector<Value>& y) {
  std::vector<Value> out;
  for (Value a : x)
    for (Value b : y) {
      auto part = cg_op(a, b);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Shadow window_shadow(Value max) {
  std::vector<Element> elements;
  for (Value a = 0; a <= max; ++a) elements.push_back({std::to_string(a), 0, 0, a == 0});
  std::vector<TableEntry> table;
  for (Value a = 0; a <= max; ++a)
    for (Value b = 0; b <= max; ++b) {
      Decomposition result;
      for (Value x : cg_op(a, b))
        if (x <= max) result.add(x, 1);
      table.push_back({a, b, std::move(result), a + b > max});
    }
  return Shadow({0}, std::move(elements), std::move(table), std::nullopt, true);
}

SingleCellResult single_cell_check(Value max) {
  SingleCellResult out;
  for (Value a = 0; a <= max; ++a)
    for (Value b = 0; b <= max; ++b) {
      ++out.pairs;
      auto product = cg_op(a + b, a);
      if (!std::binary_search(product.begin(), product.end(), b)) {
        out.passed = false;
        out.failures.emplace_back(a, b);
      }
    }
  return out;
}

AssociativityResult unbounded_associativity(Value max) {
  AssociativityResult out;
  for (Value a = 0; a <= max; ++a)
    for (Value b = 0; b <= max; ++b) {
      auto ab = cg_op(a, b);
      for (Value c = 0; c <= max; ++c) {
        ++out.triples;
        if (cg_sets(ab, {c}) != cg_sets({a}, cg_op(b, c))) {
          out.passed = false;
          out.failures.push_back({a, b, c});
        }
      }
    }
  return out;
}

Report verify_clebsch(Value max) {
  Report report("Clebsch-Gordan window K=" + std::to_string(max));

  std::vector<std::string> comm, unit;
  for (Value a = 0; a <= max; ++a) {
    if (cg_op(0, a) != std::vector<Value>{a} || cg_op(a, 0) != std::vector<Value>{a})
      unit.push_back(std::to_string(a));
    for (Value b = 0; b <= max; ++b)
      if (cg_op(a, b) != cg_op(b, a)) comm.push_back(std::to_string(a) + "," + std::to_string(b));
  }
  report.add("commutative", comm.empty(), comm);
  report.add("0 is a strict unit", unit.empty(), unit);

  AssociativityResult assoc = unbounded_associativity(max);
  std::vector<std::string> assoc_witnesses;
  for (const auto& t : assoc.failures)
    assoc_witnesses.push_back(std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]));
  report.add("set-level associativity, unbounded", assoc.passed, assoc_witnesses,
             Json{{"triples", assoc.triples}});

  Shadow window = window_shadow(max);
  AssociativityReport windowed = check_associativity(window, 1);
  report.add("window associativity on complete triples", windowed.passed && windowed.set_level_passed, {},
             Json{{"triples", windowed.triples_checked}, {"skipped", windowed.triples_skipped}});

  SingleCellResult single = single_cell_check(max);
  std::vector<std::string> cell_witnesses;
  for (const auto& [a, b] : single.failures) cell_witnesses.push_back(std::to_string(a) + "," + std::to_string(b));
  report.add("single cell via witness x = a+b", single.passed, cell_witnesses, Json{{"pairs", single.pairs}});

  GreenStructure g(window, 1);
  report.add("window has one left, right and two-sided cell",
             g.cells(CellKind::left).size() == 1 && g.cells(CellKind::right).size() == 1 &&
                 g.cells(CellKind::two_sided).size() == 1);
  const std::size_t ideals = thick_ideals(g).size();
  const std::size_t upsets = upset_count(g.poset());
  report.add("thick ideals = up-sets of cells", ideals == upsets, {},
             Json{{"antichains", ideals}, {"upsets", upsets}});
  return report;
}

}  // namespace fiatcell::clebsch
