#include "fiatcell/audit.hpp"

#include "fiatcell/checks.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"

namespace fiatcell {

Report audit_shadow(const Shadow& s, std::size_t workers) {
  Report report("shadow with " + std::to_string(s.size()) + " elements");
  AssociativityReport assoc = check_associativity(s, workers);
  std::vector<std::string> witnesses;
  if (assoc.failure) {
    const auto& f = *assoc.failure;
    witnesses.push_back(s.element(f[0]).name + ", " + s.element(f[1]).name + ", " + s.element(f[2]).name + ": " +
                        to_string(s, assoc.lhs) + " vs " + to_string(s, assoc.rhs));
  }
  report.add("associativity with multiplicities", assoc.passed, witnesses,
             Json{{"triples", assoc.triples_checked}, {"skipped", assoc.triples_skipped}});
  report.add("associativity of supports", assoc.set_level_passed);

  GreenStructure g(s, workers);
  std::vector<std::string> upward;
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId f = 0; f < s.size(); ++f)
      for (ElementId h : s.product(a, f).support())
        if (!g.leq(f, h, CellKind::left) && upward.size() < 10)
          upward.push_back(s.element(h).name + " in " + s.element(a).name + " o " + s.element(f).name);
  report.add("summands move up in the left order", upward.empty(), upward);

  const CellPartition& twos = g.cells(CellKind::two_sided);
  bool nested = true;
  for (CellKind kind : {CellKind::left, CellKind::right}) {
    const CellPartition& part = g.cells(kind);
    for (const ElementSet& cls : part.classes)
      for (ElementId x : cls)
        if (twos.class_of[x] != twos.class_of[cls.front()]) nested = false;
  }
  report.add("left and right cells nest in two-sided cells", nested, {},
             Json{{"left", g.cells(CellKind::left).size()},
                  {"right", g.cells(CellKind::right).size()},
                  {"two_sided", twos.size()}});

  Json regularity = Json::array();
  for (std::size_t c = 0; c < twos.size(); ++c) {
    RegularityCheck reg = is_strongly_regular(g, c);
    Json entry{{"cell", c}, {"strongly_regular", reg.strongly_regular}};
    if (reg.strongly_regular && s.has_involution())
      entry["m_constant_on_right_cells"] = m_values(g, c).constant_on_right_cells;
    regularity.push_back(std::move(entry));
  }
  report.add("cell regularity recorded", true, {}, Json{{"cells", regularity}});

  const std::size_t ideals = thick_ideals(g).size();
  const std::size_t upsets = upset_count(g.poset());
  report.add("thick ideals = antichains = up-sets of cells", ideals == upsets, {},
             Json{{"antichains", ideals}, {"upsets", upsets}});
  return report;
}

}  // namespace fiatcell
