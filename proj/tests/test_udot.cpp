#include "doctest.h"

#include <random>
#include <set>

#include "fiatcell/bn.hpp"
#include "fiatcell/errors.hpp"
#include "fiatcell/udot.hpp"
#include "oracles.hpp"

using namespace fiatcell;
using namespace fiatcell::udot;

namespace {

DPWord word(int source, std::initializer_list<DividedPower> factors) { return DPWord{source, factors}; }

constexpr DividedPower E1{Gen::E, 1};
constexpr DividedPower F1{Gen::F, 1};

/// Every word in E, F of the given length.
std::vector<std::vector<DividedPower>> letter_words(std::size_t length) {
  std::vector<std::vector<DividedPower>> out{{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<std::vector<DividedPower>> next;
    for (const auto& w : out)
      for (DividedPower d : {E1, F1}) {
        auto longer = w;
        longer.push_back(d);
        next.push_back(longer);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("weight") {
  CHECK(weight(2, 1) == 0);
  CHECK(weight(2, 0) == 2);
  for (int n = 0; n <= 6; ++n)
    for (int i = 0; i <= n; ++i) CHECK(weight(n, i) + weight(n, n - i) == 0);
  CHECK_THROWS_AS(weight(2, 3), InputError);
  CHECK_THROWS_AS(weight(2, -1), InputError);
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(7, -1) == 0);
}

TEST_CASE("word helpers") {
  DPWord w = word(0, {{Gen::F, 2}, {Gen::E, 1}});
  CHECK(w.target() == 1);
  CHECK(w.start_of(1) == 0);
  CHECK(w.start_of(0) == -1);
  CHECK_FALSE(in_range(3, w));
  CHECK(in_range(3, word(1, {{Gen::F, 2}, {Gen::E, 1}})));
  CHECK(to_string(word(1, {{Gen::F, 2}, {Gen::E, 1}})) == "F_0^(2)E_1^(1)");
  CHECK(to_string(identity_word(3)) == "1_3");
  CHECK(concat(e_word(1, 1), f_word(0, 1)) == word(0, {E1, F1}));
  CHECK_THROWS_AS(concat(e_word(2, 1), f_word(0, 1)), InputError);
  CHECK(bn::adjoint(f_word(0, 2)) == e_word(2, 2));
  CHECK(bn::adjoint(word(1, {{Gen::F, 2}, {Gen::E, 1}})) == word(2, {{Gen::F, 1}, {Gen::E, 2}}));
}

TEST_CASE("dp_normalize examples") {
  SUBCASE("two single E steps merge with multiplicity 2") {
    UVector expected;
    expected.add(e_word(2, 2), 2);
    CHECK(dp_normalize(3, word(2, {E1, E1})) == expected);
  }
  SUBCASE("E after F at object 0 of B_2") {
    UVector v = dp_normalize(2, word(0, {E1, F1}));
    UVector expected;
    expected.add(identity_word(0), 2);
    CHECK(v == expected);
  }
  SUBCASE("E after F at object 1 of B_3") {
    UVector v = dp_normalize(3, word(1, {E1, F1}));
    UVector expected;
    expected.add(word(1, {F1, E1}), 1);
    expected.add(identity_word(1), 1);
    CHECK(v == expected);
  }
  SUBCASE("out of range words vanish") {
    CHECK(dp_normalize(2, word(0, {E1})).empty());
    CHECK(dp_normalize(2, word(2, {F1})).empty());
  }
}

TEST_CASE("closed form agrees with single-step rewriting on letter words") {
  std::size_t compared = 0;
  for (int n = 1; n <= 5; ++n)
    for (std::size_t length = 0; length <= 6; ++length)
      for (const auto& letters : letter_words(length))
        for (int source = 0; source <= n; ++source) {
          DPWord w{source, letters};
          UVector fast = dp_normalize(n, w);
          UVector slow = oracle::oracle_dp_normalize(n, w);
          CHECK_MESSAGE(fast == slow, "n=" << n << " word " << to_string(w) << ": " << to_string(fast) << " vs "
                                           << to_string(slow));
          ++compared;
        }
  CHECK(compared == 2540);
}

TEST_CASE("closed form agrees with single-step rewriting on divided-power words") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    DPWord w{static_cast<int>(rng() % static_cast<unsigned>(n + 1)), {}};
    int length = static_cast<int>(rng() % 4);
    for (int p = 0; p < length; ++p)
      w.factors.push_back({rng() % 2 ? Gen::E : Gen::F, 1 + static_cast<int>(rng() % 3)});
    CHECK(dp_normalize(n, w) == oracle::oracle_dp_normalize(n, w));
  }
}

TEST_CASE("rewriting is confluent under random redex choices") {
  for (int n = 2; n <= 6; ++n) {
    BnBasis basis(n);
    const auto& words = basis.words();
    for (std::size_t a = 0; a < words.size(); ++a)
      for (std::size_t b = 0; b < words.size(); ++b) {
        if (words[a].source != words[b].target()) continue;
        DPWord w = concat(words[a], words[b]);
        UVector left = dp_normalize(n, w, {Order::FE, Strategy::leftmost, 0});
        CHECK(dp_normalize(n, w, {Order::FE, Strategy::rightmost, 0}) == left);
        CHECK(dp_normalize(n, w, {Order::FE, Strategy::random, a * 131 + b}) == left);
        UVector ef = normalize(n, UVector(w), {Order::EF, Strategy::leftmost, 0});
        CHECK(normalize(n, UVector(w), {Order::EF, Strategy::random, a + 17 * b}) == ef);
      }
  }
}

TEST_CASE("Prop 17 basis shape") {
  for (int n = 1; n <= 8; ++n) {
    BnBasis basis(n);
    std::size_t total = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        auto list = hom_basis(n, i, j);
        CHECK(list.size() == static_cast<std::size_t>(std::min({i, j, n - i, n - j}) + 1));
        std::set<DPWord> distinct(list.begin(), list.end());
        CHECK(distinct.size() == list.size());
        for (const DPWord& w : list) {
          CHECK(w.source == i);
          CHECK(w.target() == j);
          CHECK(in_range(n, w));
        }
        total += list.size();
      }
    CHECK(basis.size() == total);
  }
  CHECK(BnBasis(2).size() == 10);
  CHECK(BnBasis(6).size() == 84);
  CHECK(BnBasis(8).size() == 165);
  CHECK(hom_case(4, 1, 2) == 'a');
  CHECK(hom_case(4, 1, 3) == 'b');
  CHECK(hom_case(4, 2, 3) == 'b');
  CHECK(hom_case(4, 3, 2) == 'c');
  CHECK(hom_case(4, 2, 1) == 'd');
  CHECK(hom_case(4, 1, 1) == 'e');
  CHECK(hom_case(4, 2, 2) == 'f');
}

TEST_CASE("basis_change examples") {
  BnBasis b2(2);
  Decomposition d = basis_change(b2, UVector(word(1, {E1, F1})));
  CHECK(d == Decomposition::single(b2.index_of(word(1, {E1, F1}))));
  CHECK(basis_change(b2, UVector(identity_word(1))) == Decomposition::single(b2.index_of(identity_word(1))));

  // F_0^(2)E_1^(1) from object 1 to 2 of B_2: a multiple of F_1^(1).
  UVector v = dp_normalize(2, word(1, {{Gen::F, 2}, E1}));
  Decomposition f = basis_change(b2, v);
  REQUIRE(f.size() == 1);
  CHECK(f.terms().front().first == b2.index_of(f_word(1, 1)));
  CHECK(f.terms().front().second == 1);

  // At object 3 of B_4, EF = FE - 2·1: intermediate coefficients may be
  // negative, final multiplicities may not.
  BnBasis b4(4);
  UVector normal = normalize(4, UVector(word(3, {E1, F1})), {Order::FE});
  CHECK(normal.coefficient(identity_word(3)) == -2);
  CHECK(normal.coefficient(word(3, {F1, E1})) == 1);
  CHECK(basis_change(b4, normal) == Decomposition::single(b4.index_of(word(3, {E1, F1}))));
  UVector negative(identity_word(3));
  negative.add(word(3, {E1, F1}), -1);
  CHECK_THROWS_AS(basis_change(b4, negative), ConsistencyError);
}

TEST_CASE("structure constants match the representation on irreducibles") {
  for (int n = 1; n <= 6; ++n) {
    Shadow s = bn::build_bn(n);
    BnBasis basis(n);
    std::vector<std::vector<std::int64_t>> act;
    for (const DPWord& w : basis.words()) act.push_back(oracle::irreducible_action(n, w));

    // Each hom space maps injectively, so the constants are determined.
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        std::vector<std::vector<std::int64_t>> rows;
        for (const DPWord& w : hom_basis(n, i, j)) rows.push_back(act[basis.index_of(w)]);
        CHECK(oracle::rank(rows) == rows.size());
      }

    for (ElementId a = 0; a < s.size(); ++a)
      for (ElementId b = 0; b < s.size(); ++b) {
        if (!s.composable(a, b)) continue;
        std::vector<std::int64_t> lhs(act[a].size()), rhs(act[a].size(), 0);
        for (std::size_t m = 0; m < lhs.size(); ++m) lhs[m] = act[a][m] * act[b][m];
        for (const auto& [c, mult] : s.product(a, b).terms())
          for (std::size_t m = 0; m < rhs.size(); ++m) rhs[m] += static_cast<std::int64_t>(mult) * act[c][m];
        CHECK_MESSAGE(lhs == rhs, s.element(a).name << " o " << s.element(b).name);
      }
  }
}
