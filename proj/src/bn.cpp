#include "fiatcell/bn.hpp"

#include <algorithm>
#include <set>

#include "fiatcell/checks.hpp"
#include "fiatcell/errors.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"

namespace fiatcell::bn {

using udot::BnBasis;
using udot::DPWord;
using udot::Gen;

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN)
    throw InputError("n must lie in 1.." + std::to_string(kMaxN) + ", got " + std::to_string(n));
}

/// Basis element equal to a single word, which must decompose as exactly one
/// indecomposable with multiplicity one.
ElementId element_of(const BnBasis& basis, const DPWord& w) {
  Decomposition d = udot::basis_change(basis, udot::UVector(w));
  if (d.size() != 1 || d.terms().front().second != 1)
    throw ConsistencyError(udot::to_string(w) + " is not indecomposable");
  return d.terms().front().first;
}

/// X^{(k)} Y^{(k)} 1_i with X the outer generator; 1_i when k = 0.
DPWord sandwich(int i, Gen outer, int k) {
  DPWord w{i, {}};
  if (k > 0) w.factors = {{outer, k}, {outer == Gen::F ? Gen::E : Gen::F, k}};
  return w;
}

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

}  // namespace

DPWord adjoint(const DPWord& w) {
  DPWord out{w.target(), {}};
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.factors.push_back({it->gen == Gen::E ? Gen::F : Gen::E, it->power});
  return out;
}

Shadow build_bn(int n, std::size_t workers) {
  check_n(n);
  const BnBasis basis(n);
  const auto& words = basis.words();
  const std::size_t size = words.size();

  std::vector<Element> elements;
  elements.reserve(size);
  for (const DPWord& w : words)
    elements.push_back({udot::to_string(w), w.source, w.target(), w.factors.empty()});

  std::vector<std::vector<TableEntry>> rows(size);
  parallel_for(
      size,
      [&](std::size_t a) {
        for (ElementId b = 0; b < size; ++b) {
          if (words[a].source != words[b].target()) continue;
          DPWord word = udot::concat(words[a], words[b]);
          rows[a].push_back({a, b, udot::basis_change(basis, udot::dp_normalize(n, word)), false});
        }
      },
      workers);
  std::vector<TableEntry> table;
  for (auto& row : rows)
    for (auto& entry : row) table.push_back(std::move(entry));

  std::vector<ElementId> involution(size);
  for (ElementId a = 0; a < size; ++a) involution[a] = basis.index_of(adjoint(words[a]));

  std::vector<int> objects;
  for (int i = 0; i <= n; ++i) objects.push_back(i);
  return Shadow(std::move(objects), std::move(elements), std::move(table), std::move(involution));
}

Report verify_relations(int n, const Shadow& s) {
  const BnBasis basis(n);
  Report report("B_" + std::to_string(n) + " relations");

  std::vector<std::string> bad55;
  for (int i = 0; i <= n; ++i) {
    ElementId unit = s.identity(i);
    Decomposition lhs, rhs;
    if (i < n) lhs = s.product(basis.index_of(udot::e_word(i + 1, 1)), basis.index_of(udot::f_word(i, 1)));
    lhs.add(unit, static_cast<Multiplicity>(i));
    if (i > 0) rhs = s.product(basis.index_of(udot::f_word(i - 1, 1)), basis.index_of(udot::e_word(i, 1)));
    rhs.add(unit, static_cast<Multiplicity>(n - i));
    if (lhs != rhs)
      bad55.push_back("i=" + std::to_string(i) + ": " + to_string(s, lhs) + " vs " + to_string(s, rhs));
  }
  report.add("commutation EF+1^i = FE+1^(n-i)", bad55.empty(), bad55,
             Json{{"objects", n + 1}});

  std::vector<std::string> bad65;
  std::size_t instances = 0;
  for (int i = 0; i <= n; ++i) {
    Decomposition chain;
    if (i > 0) chain = Decomposition::single(basis.index_of(udot::e_word(i, 1)));
    for (int k = 1; k <= i; ++k) {
      if (k > 1) chain = compose(s, Decomposition::single(basis.index_of(udot::e_word(i - k + 1, 1))), chain);
      Decomposition expected =
          Decomposition::single(basis.index_of(udot::e_word(i, k)), static_cast<Multiplicity>(factorial(k)));
      ++instances;
      if (chain != expected)
        bad65.push_back("E at i=" + std::to_string(i) + ", k=" + std::to_string(k) + ": " +
                        to_string(s, chain));
    }
    if (i == n) continue;
    chain = Decomposition::single(basis.index_of(udot::f_word(i, 1)));
    for (int k = 1; k <= n - i; ++k) {
      if (k > 1) chain = compose(s, Decomposition::single(basis.index_of(udot::f_word(i + k - 1, 1))), chain);
      Decomposition expected =
          Decomposition::single(basis.index_of(udot::f_word(i, k)), static_cast<Multiplicity>(factorial(k)));
      ++instances;
      if (chain != expected)
        bad65.push_back("F at i=" + std::to_string(i) + ", k=" + std::to_string(k) + ": " +
                        to_string(s, chain));
    }
  }
  report.add("divided powers X^k = k! X^(k)", bad65.empty(), bad65, Json{{"instances", instances}});
  return report;
}

std::vector<IntMatrix> defining_action(int n, const Shadow& s) {
  const BnBasis basis(n);
  if (basis.size() != s.size()) throw InputError("shadow is not B_" + std::to_string(n));
  std::vector<IntMatrix> act;
  act.reserve(s.size());
  for (const DPWord& w : basis.words()) {
    std::int64_t value = 1;
    for (std::size_t p = 0; p < w.factors.size(); ++p) {
      int start = w.start_of(p);
      int k = w.factors[p].power;
      value *= w.factors[p].gen == Gen::F ? udot::binomial(start + k, k) : udot::binomial(n - (start - k), k);
    }
    IntMatrix m(n + 1, n + 1);
    m(w.target(), w.source) = value;
    act.push_back(std::move(m));
  }
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId b = 0; b < s.size(); ++b) {
      if (!s.composable(a, b)) continue;
      IntMatrix sum(n + 1, n + 1);
      for (const auto& [c, m] : s.product(a, b).terms()) sum.add(act[c], static_cast<std::int64_t>(m));
      if (act[a] * act[b] != sum)
        throw ConsistencyError("defining action is not multiplicative at (" + s.element(a).name + ", " +
                               s.element(b).name + ")");
    }
  return act;
}

Report bn_cells_report(int n, const Shadow& s, std::size_t workers) {
  const BnBasis basis(n);
  const int half = n / 2;
  GreenStructure g(s, workers);
  Report report("B_" + std::to_string(n) + " cells");
  const CellPartition& twos = g.cells(CellKind::two_sided);
  const CellPartition& lefts = g.cells(CellKind::left);
  const CellPartition& rights = g.cells(CellKind::right);

  report.add("two-sided cell count = floor(n/2)+1", twos.size() == static_cast<std::size_t>(half + 1), {},
             Json{{"count", twos.size()}, {"expected", half + 1}});

  std::set<std::size_t> j_cells;
  for (int i = 0; i <= half; ++i) j_cells.insert(g.cell_of(s.identity(i), CellKind::two_sided));
  report.add("cells of 1_0..1_floor(n/2) are distinct and complete",
             j_cells.size() == static_cast<std::size_t>(half + 1) && j_cells.size() == twos.size());

  // Generators of the listed left/right cells, indexed by (i, k).
  struct Generator {
    int i, k;
    ElementId element;
  };
  std::vector<Generator> gens;
  for (int i = 0; i <= n; ++i) {
    if (i <= half) {
      for (int k = 0; k <= i; ++k)
        gens.push_back({i, k, element_of(basis, sandwich(i, Gen::F, k))});
    } else {
      for (int k = 0; k <= n - i; ++k)
        gens.push_back({i, k, element_of(basis, sandwich(i, Gen::E, k))});
    }
  }

  auto distinct_and_complete = [&](const CellPartition& part, const std::string& label) {
    std::set<std::size_t> seen;
    std::vector<std::string> witnesses;
    for (const auto& gen : gens)
      if (!seen.insert(part.class_of[gen.element]).second)
        witnesses.push_back("(" + std::to_string(gen.i) + "," + std::to_string(gen.k) + ") repeats a " + label +
                            " cell");
    bool complete = seen.size() == part.size();
    if (!complete) witnesses.push_back(std::to_string(part.size() - seen.size()) + " " + label + " cells unlisted");
    report.add(label + " cell generators distinct and complete", witnesses.empty(), witnesses,
               Json{{"generators", gens.size()}, {"cells", part.size()}});
  };
  distinct_and_complete(lefts, "left");
  distinct_and_complete(rights, "right");

  // Left cells per two-sided cell as predicted by the (i, k) indexing: the
  // generator through object i-k (resp. i+k) lies in the cell of 1_m with
  // m = i-k (resp. n-i-k).
  std::vector<std::string> count_witnesses;
  Json per_cell = Json::array();
  for (int m = 0; m <= half; ++m) {
    std::size_t expected = 0;
    for (const auto& gen : gens) {
      int through = gen.i <= half ? gen.i - gen.k : n - gen.i - gen.k;
      if (through == m) ++expected;
    }
    std::size_t cell = g.cell_of(s.identity(m), CellKind::two_sided);
    std::set<std::size_t> left_cells;
    for (ElementId x : twos.classes[cell]) left_cells.insert(lefts.class_of[x]);
    per_cell.push_back({{"object", m}, {"left_cells", left_cells.size()}, {"indexed", expected}});
    if (left_cells.size() != expected)
      count_witnesses.push_back("cell of 1_" + std::to_string(m) + ": " + std::to_string(left_cells.size()) +
                                " left cells, indexing predicts " + std::to_string(expected));
  }
  report.add("left cells per two-sided cell match (i,k) indexing", count_witnesses.empty(), count_witnesses,
             Json{{"cells", per_cell}});

  std::vector<std::string> reg_witnesses, eq2_witnesses;
  std::vector<MValues> mvals(twos.size());
  for (std::size_t c = 0; c < twos.size(); ++c) {
    RegularityCheck reg = is_strongly_regular(g, c);
    if (!reg.strongly_regular) {
      reg_witnesses.push_back(reg.witness);
      continue;
    }
    mvals[c] = m_values(g, c);
    if (!mvals[c].constant_on_right_cells) eq2_witnesses.push_back(mvals[c].witness);
  }
  report.add("every two-sided cell strongly regular", reg_witnesses.empty(), reg_witnesses);
  report.add("m_F constant on right cells", reg_witnesses.empty() && eq2_witnesses.empty(), eq2_witnesses);

  // m_F on the right cell of F_k^{(i-k)}E_i^{(i-k)} equals the multiplicity
  // of 1_k in E_i^{(i-k)} F_k^{(i-k)}.
  std::vector<std::string> formula_witnesses;
  if (reg_witnesses.empty()) {
    for (int i = 0; i <= half; ++i)
      for (int k = 0; k <= i; ++k) {
        ElementId f = element_of(basis, sandwich(i, Gen::F, i - k));
        Multiplicity expected =
            s.product(basis.index_of(udot::e_word(i, i - k)), basis.index_of(udot::f_word(k, i - k)))
                .multiplicity(s.identity(k));
        std::size_t r = rights.class_of[f];
        std::size_t c = twos.class_of[f];
        for (ElementId x : rights.classes[r])
          if (mvals[c].m.at(x) != expected)
            formula_witnesses.push_back("m(" + s.element(x).name + ") = " + std::to_string(mvals[c].m.at(x)) +
                                        ", expected " + std::to_string(expected));
      }
  }
  report.add("m_F on right cells equals mult of 1_k in E^(i-k)F^(i-k)",
             reg_witnesses.empty() && formula_witnesses.empty(), formula_witnesses);
  return report;
}

Report defining_representation_check(int n, const Shadow& s) {
  const BnBasis basis(n);
  Report report("B_" + std::to_string(n) + " defining representation");
  std::vector<IntMatrix> act;
  try {
    act = defining_action(n, s);
    report.add("defining action multiplicative", true);
  } catch (const ConsistencyError& e) {
    report.add("defining action multiplicative", false, {e.what()});
    return report;
  }

  GreenStructure g(s, 1);
  const CellPartition& lefts = g.cells(CellKind::left);
  const ElementSet& cell = lefts.classes[lefts.class_of[s.identity(0)]];
  ElementSet expected;
  for (int k = 0; k <= n; ++k) expected.push_back(basis.index_of(udot::f_word(0, k)));
  std::sort(expected.begin(), expected.end());
  if (cell != expected) {
    report.add("left cell of 1_0 is {F_0^(k)}", false);
    return report;
  }
  report.add("left cell of 1_0 is {F_0^(k)}", true);

  CellModuleMatrices module = cell_module(s, cell);
  std::vector<std::size_t> object_of(module.basis.size());
  for (std::size_t p = 0; p < module.basis.size(); ++p) object_of[p] = s.element(module.basis[p]).target;
  std::vector<std::string> witnesses;
  for (ElementId a = 0; a < s.size(); ++a) {
    const IntMatrix& m = module.matrices[a];
    IntMatrix permuted(n + 1, n + 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) permuted(object_of[r], object_of[c]) = m(r, c);
    if (permuted != act[a]) witnesses.push_back(s.element(a).name);
  }
  report.add("cell module of L(1_0) equals defining action", witnesses.empty(), witnesses,
             Json{{"elements", s.size()}});
  return report;
}

Report recursion_check(int n, std::size_t workers) {
  if (n < 3) throw InputError("recursion check needs n >= 3");
  check_n(n);
  Shadow small = build_bn(n - 2, workers);
  Shadow big = build_bn(n, workers);
  const BnBasis small_basis(n - 2);
  const BnBasis big_basis(n);
  Report report("B_" + std::to_string(n - 2) + " -> B_" + std::to_string(n) + " index shift");

  std::vector<ElementId> phi(small.size());
  std::vector<char> in_image(big.size(), 0);
  bool injective = true;
  for (ElementId a = 0; a < small.size(); ++a) {
    DPWord shifted = small_basis.words()[a];
    shifted.source += 1;
    phi[a] = big_basis.index_of(shifted);
    if (in_image[phi[a]]) injective = false;
    in_image[phi[a]] = 1;
  }
  report.add("shift is an injective map on indecomposables", injective, {},
             Json{{"source_elements", small.size()}, {"target_elements", big.size()}});

  GreenStructure g(big, workers);
  const std::size_t top = g.cell_of(big.identity(0), CellKind::two_sided);
  std::vector<std::string> witnesses;
  std::size_t pairs = 0, mismatches = 0;
  bool dropped_in_top_cell = true;
  for (ElementId a = 0; a < small.size(); ++a)
    for (ElementId b = 0; b < small.size(); ++b) {
      if (!small.composable(a, b)) continue;
      ++pairs;
      Decomposition restricted;
      for (const auto& [c, m] : big.product(phi[a], phi[b]).terms()) {
        if (in_image[c])
          restricted.add(c, m);
        else if (g.cell_of(c, CellKind::two_sided) != top)
          dropped_in_top_cell = false;
      }
      Decomposition mapped;
      for (const auto& [c, m] : small.product(a, b).terms()) mapped.add(phi[c], m);
      if (restricted != mapped) {
        ++mismatches;
        if (witnesses.size() < 10)
          witnesses.push_back("(" + small.element(a).name + ", " + small.element(b).name + "): " +
                              to_string(big, restricted) + " vs " + to_string(big, mapped));
      }
    }
  report.add("shifted products agree after deleting terms outside the image", mismatches == 0, witnesses,
             Json{{"pairs", pairs}, {"mismatches", mismatches}});
  report.add("deleted terms lie in the cell of 1_0", dropped_in_top_cell);
  return report;
}

Report verify_bn(int n, std::size_t workers) {
  Shadow s = build_bn(n, workers);
  const BnBasis basis(n);
  Report report("B_" + std::to_string(n));

  std::vector<std::string> count_witnesses;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      int expected = std::min({i, j, n - i, n - j}) + 1;
      int actual = 0;
      for (const Element& e : s.elements())
        if (e.source == i && e.target == j) ++actual;
      if (actual != expected)
        count_witnesses.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " +
                                  std::to_string(actual) + " vs " + std::to_string(expected));
    }
  report.add("indecomposables per hom = min(i,j,n-i,n-j)+1", count_witnesses.empty(), count_witnesses,
             Json{{"total", s.size()}});

  AssociativityReport assoc = check_associativity(s, workers);
  std::vector<std::string> assoc_witnesses;
  if (assoc.failure) {
    const auto& f = *assoc.failure;
    assoc_witnesses.push_back(s.element(f[0]).name + ", " + s.element(f[1]).name + ", " + s.element(f[2]).name +
                              ": " + to_string(s, assoc.lhs) + " vs " + to_string(s, assoc.rhs));
  }
  report.add("associativity with multiplicities", assoc.passed, assoc_witnesses,
             Json{{"triples", assoc.triples_checked}});
  report.add("associativity of supports", assoc.set_level_passed);
  report.add("involution is an anti-automorphism", s.has_involution());

  report.append(verify_relations(n, s));
  report.append(bn_cells_report(n, s, workers));
  report.append(defining_representation_check(n, s));

  GreenStructure g(s, workers);
  const std::size_t ideals = thick_ideals(g).size();
  const std::size_t upsets = upset_count(g.poset());
  report.add("thick ideals = up-sets of cells = floor(n/2)+2",
             ideals == upsets && ideals == static_cast<std::size_t>(n / 2 + 2), {},
             Json{{"antichains", ideals}, {"upsets", upsets}});

  if (n >= 3) report.append(recursion_check(n, workers));
  return report;
}

}  // namespace fiatcell::bn
