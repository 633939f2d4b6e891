#include "doctest.h"

#include "fiatcell/checks.hpp"
#include "fiatcell/clebsch.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"

using namespace fiatcell;
using namespace fiatcell::clebsch;

TEST_CASE("cg_op formula") {
  CHECK(cg_op(1, 1) == std::vector<Value>{0, 2});
  CHECK(cg_op(2, 3) == std::vector<Value>{1, 3, 5});
  for (Value n = 0; n <= 10; ++n) CHECK(cg_op(0, n) == std::vector<Value>{n});
  for (Value a = 0; a <= 12; ++a)
    for (Value b = 0; b <= 12; ++b) {
      auto out = cg_op(a, b);
      CHECK(out == cg_op(b, a));
      CHECK(out.size() == std::min(a, b) + 1);
      for (Value x : out) {
        CHECK(x + std::min(a, b) * 2 >= std::max(a, b) + std::min(a, b));
        CHECK(x <= a + b);
        CHECK((x + a + b) % 2 == 0);
      }
    }
}

TEST_CASE("window shadows") {
  Shadow w0 = window_shadow(0);
  CHECK(w0.size() == 1);
  CHECK(w0.element(0).identity);
  CHECK(w0.partial());

  Shadow w2 = window_shadow(2);
  Decomposition expected;
  expected.add(0, 1);
  expected.add(2, 1);
  CHECK(w2.product(1, 1) == expected);
  CHECK_FALSE(w2.truncated(1, 1));
  CHECK(w2.truncated(2, 1));
  CHECK(w2.product(2, 1) == Decomposition::single(1));

  auto report = check_associativity(window_shadow(25));
  CHECK(report.passed);
  CHECK(report.set_level_passed);
  CHECK(report.triples_checked > 0);
}

TEST_CASE("one cell") {
  CHECK(single_cell_check(0).passed);
  SingleCellResult r = single_cell_check(25);
  CHECK(r.passed);
  CHECK(r.pairs == 26 * 26);
  auto witness = cg_op(3 + 0, 3);
  CHECK(std::find(witness.begin(), witness.end(), 0) != witness.end());

  Shadow w = window_shadow(8);
  GreenStructure g(w);
  CHECK(g.cells(CellKind::two_sided).size() == 1);
  CHECK(thick_ideals(g).size() == 2);
  CHECK(quotient_by_upset(w, g.cells(CellKind::two_sided).classes[0]).size() == 0);
}

TEST_CASE("unbounded associativity and the full suite") {
  AssociativityResult r = unbounded_associativity(25);
  CHECK(r.passed);
  CHECK(r.triples == 26 * 26 * 26);
  Report report = verify_clebsch(25);
  for (const Check& c : report.checks()) CHECK_MESSAGE(c.passed, c.name);
}
