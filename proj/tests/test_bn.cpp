#include "doctest.h"

#include "fiatcell/bn.hpp"
#include "fiatcell/errors.hpp"
#include "fiatcell/green.hpp"
#include "oracles.hpp"

using namespace fiatcell;

namespace {

bool all_pass(const Report& r) {
  for (const Check& c : r.checks())
    if (!c.passed) {
      MESSAGE(r.subject() << ": " << c.name);
      return false;
    }
  return true;
}

}  // namespace

TEST_CASE("build_bn sizes and names") {
  Shadow b1 = bn::build_bn(1);
  CHECK(b1.size() == 4);
  for (const char* name : {"1_0", "1_1", "F_0^(1)", "E_1^(1)"}) CHECK(b1.find(name).has_value());
  CHECK(bn::build_bn(2).size() == 10);
  CHECK(bn::build_bn(6).size() == 84);
  CHECK_THROWS_AS(bn::build_bn(0), InputError);
  CHECK_THROWS_AS(bn::build_bn(bn::kMaxN + 1), InputError);
}

TEST_CASE("involution is the adjoint") {
  Shadow s = bn::build_bn(4);
  REQUIRE(s.has_involution());
  CHECK(s.star(s.at("F_1^(2)")) == s.at("E_3^(2)"));
  for (int i = 0; i <= 4; ++i) CHECK(s.star(s.identity(i)) == s.identity(i));
  for (ElementId a = 0; a < s.size(); ++a) {
    CHECK(s.star(s.star(a)) == a);
    for (ElementId b = 0; b < s.size(); ++b) {
      if (!s.composable(a, b)) continue;
      Decomposition starred;
      for (const auto& [c, m] : s.product(a, b).terms()) starred.add(s.star(c), m);
      CHECK(starred == s.product(s.star(b), s.star(a)));
    }
  }
}

TEST_CASE("structure constants are nonnegative and typed") {
  for (int n = 1; n <= 6; ++n) {
    Shadow s = bn::build_bn(n);
    for (ElementId a = 0; a < s.size(); ++a)
      for (ElementId b = 0; b < s.size(); ++b)
        for (const auto& [c, m] : s.product(a, b).terms()) {
          CHECK(m > 0);
          CHECK(s.element(c).source == s.element(b).source);
          CHECK(s.element(c).target == s.element(a).target);
        }
  }
}

TEST_CASE("relations hold in every B_n") {
  for (int n = 1; n <= 8; ++n) CHECK(all_pass(bn::verify_relations(n, bn::build_bn(n))));
}

TEST_CASE("defining action") {
  const int n = 2;
  Shadow s = bn::build_bn(n);
  auto act = bn::defining_action(n, s);
  CHECK(act[s.at("F_0^(1)")](1, 0) == 1);
  CHECK(act[s.at("E_1^(1)")](0, 1) == 2);
  CHECK((act[s.at("E_1^(1)")] * act[s.at("F_0^(1)")])(0, 0) == 2);
  for (int i = 0; i <= n; ++i) {
    IntMatrix unit(n + 1, n + 1);
    unit(i, i) = 1;
    CHECK(act[s.identity(i)] == unit);
  }
  for (int m = 3; m <= 6; ++m) CHECK_NOTHROW(bn::defining_action(m, bn::build_bn(m)));
}

TEST_CASE("cell structure of B_n") {
  for (int n = 1; n <= 6; ++n) {
    Shadow s = bn::build_bn(n);
    CHECK(all_pass(bn::bn_cells_report(n, s)));
    GreenStructure g(s);
    CHECK(g.cells(CellKind::two_sided).size() == static_cast<std::size_t>(n / 2 + 1));
    // The cell through 1_m has n - 2m + 1 left cells.
    for (int m = 0; m <= n / 2; ++m) {
      std::set<std::size_t> lefts;
      for (ElementId x : g.cells(CellKind::two_sided).classes[g.cell_of(s.identity(m), CellKind::two_sided)])
        lefts.insert(g.cell_of(x, CellKind::left));
      CHECK(lefts.size() == static_cast<std::size_t>(n - 2 * m + 1));
    }
  }
  Shadow b4 = bn::build_bn(4);
  CHECK(GreenStructure(b4).cells(CellKind::two_sided).size() == 3);
}

TEST_CASE("m_F equals a binomial coefficient") {
  for (int n = 2; n <= 6; ++n) {
    Shadow s = bn::build_bn(n);
    GreenStructure g(s);
    for (int i = 0; i <= n / 2; ++i) {
      std::size_t cell = g.cell_of(s.identity(i), CellKind::two_sided);
      MValues mv = m_values(g, cell);
      CHECK(mv.m.at(s.identity(i)) == 1);
    }
    // Right cell of F_k^(i-k)E_i^(i-k) carries C(n-2k, i-k).
    for (int i = 1; i <= n / 2; ++i)
      for (int k = 0; k < i; ++k) {
        udot::DPWord w{i, {{udot::Gen::F, i - k}, {udot::Gen::E, i - k}}};
        Decomposition d = udot::basis_change(udot::BnBasis(n), udot::UVector(w));
        REQUIRE(d.size() == 1);
        const ElementId* f = &d.terms().front().first;
        std::size_t cell = g.cell_of(*f, CellKind::two_sided);
        CHECK(m_values(g, cell).m.at(*f) == static_cast<Multiplicity>(oracle::choose(n - 2 * k, i - k)));
      }
  }
}

TEST_CASE("cell module of 1_0 is the defining representation") {
  for (int n = 1; n <= 6; ++n) CHECK(all_pass(bn::defining_representation_check(n, bn::build_bn(n))));
}

TEST_CASE("index shift from B_{n-2} to B_n") {
  for (int n = 3; n <= 6; ++n) {
    Report r = bn::recursion_check(n);
    CHECK(all_pass(r));
    const Check* pairs = r.find("shifted products agree after deleting terms outside the image");
    REQUIRE(pairs != nullptr);
    CHECK(pairs->details["mismatches"] == 0);
  }
  CHECK(bn::recursion_check(3).find("shift is an injective map on indecomposables")->details["source_elements"] ==
        4);
  CHECK_THROWS_AS(bn::recursion_check(2), InputError);
}

TEST_CASE("full suite") {
  for (int n = 1; n <= 8; ++n) CHECK(all_pass(bn::verify_bn(n)));
}
