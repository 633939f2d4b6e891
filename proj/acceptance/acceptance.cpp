// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fiatcell/bn.hpp"
#include "fiatcell/checks.hpp"
#include "fiatcell/clebsch.hpp"
#include "fiatcell/cli.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"
#include "fiatcell/schur.hpp"
#include "../tests/oracles.hpp"

using namespace fiatcell;

namespace {

struct Outcome {
  bool passed = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      note = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_pass(const Report& r) { return r.passed(); }

std::string first_failure(const Report& r) {
  for (const Check& c : r.checks())
    if (!c.passed) return r.subject() + ": " + c.name;
  return {};
}

Outcome bn_construction() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    auto start = Clock::now();
    Shadow s = bn::build_bn(n);
    AssociativityReport assoc = check_associativity(s);
    o.require(assoc.passed && assoc.set_level_passed, "associativity fails for n=" + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        int count = 0;
        for (const Element& e : s.elements())
          if (e.source == i && e.target == j) ++count;
        o.require(count == std::min({i, j, n - i, n - j}) + 1, "hom count mismatch at n=" + std::to_string(n));
      }
    if (n == 2) o.require(s.size() == 10, "B_2 does not have 10 elements");
    o.require(seconds_since(start) < 10.0, "n=" + std::to_string(n) + " exceeded 10 s");
  }
  return o;
}

Outcome relations() {
  Outcome o;
  for (int n = 1; n <= bn::kMaxN; ++n) {
    Shadow s = bn::build_bn(n);
    auto start = Clock::now();
    Report r = bn::verify_relations(n, s);
    o.require(all_pass(r), first_failure(r));
    o.require(seconds_since(start) < 1.0, "relations exceeded 1 s at n=" + std::to_string(n));
  }
  return o;
}

Outcome cells() {
  Outcome o;
  auto start = Clock::now();
  for (int n = 1; n <= 6; ++n) {
    Report r = bn::bn_cells_report(n, bn::build_bn(n));
    o.require(all_pass(r), first_failure(r));
  }
  o.require(seconds_since(start) < 30.0, "exceeded 30 s");
  return o;
}

Outcome defining_representation() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    Report r = bn::defining_representation_check(n, bn::build_bn(n));
    o.require(all_pass(r), first_failure(r));
  }
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::size_t words = 0;
  for (int n = 1; n <= 5; ++n)
    for (std::size_t length = 0; length <= 6; ++length)
      for (std::size_t bits = 0; bits < (std::size_t{1} << length); ++bits)
        for (int source = 0; source <= n; ++source) {
          udot::DPWord w{source, {}};
          for (std::size_t p = 0; p < length; ++p)
            w.factors.push_back({(bits >> p & 1) ? udot::Gen::F : udot::Gen::E, 1});
          ++words;
          o.require(udot::dp_normalize(n, w) == oracle::oracle_dp_normalize(n, w),
                    "disagreement on " + udot::to_string(w) + " at n=" + std::to_string(n));
        }
  o.note = o.passed ? std::to_string(words) + " words" : o.note;
  return o;
}

Outcome recursion(const std::string& artifact) {
  Outcome o;
  Json record = Json::array();
  std::string summary;
  for (int n = 3; n <= 6; ++n) {
    Report r = bn::recursion_check(n);
    record.push_back(r.to_json());
    summary += (summary.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " " +
               (r.passed() ? "agrees" : "differs");
  }
  std::ofstream out(artifact);
  out << record.dump(1) << "\n";
  o.require(static_cast<bool>(out), "could not write " + artifact);
  o.note = o.passed ? "recorded in " + artifact + " (" + summary + ")" : o.note;
  return o;
}

Outcome clebsch_gordan() {
  Outcome o;
  auto start = Clock::now();
  auto assoc = clebsch::unbounded_associativity(25);
  o.require(assoc.passed, "set-level associativity fails");
  for (clebsch::Value a = 0; a <= 25; ++a)
    o.require(clebsch::cg_op(0, a) == std::vector<clebsch::Value>{a} &&
                  clebsch::cg_op(a, 0) == std::vector<clebsch::Value>{a},
              "0 is not a strict unit");
  o.require(clebsch::single_cell_check(25).passed, "witness x = a+b fails");
  Shadow window = clebsch::window_shadow(25);
  GreenStructure g(window);
  for (CellKind kind : {CellKind::left, CellKind::right, CellKind::two_sided})
    o.require(g.cells(kind).size() == 1, "window has more than one " + to_string(kind) + " cell");
  o.require(seconds_since(start) < 5.0, "exceeded 5 s");
  return o;
}

Outcome schur_combinatorics() {
  Outcome o;
  auto start = Clock::now();
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 6; ++r) {
      Report rep = schur::verify_schur(n, r);
      o.require(all_pass(rep), first_failure(rep));
    }
  o.require(seconds_since(start) < 30.0, "exceeded 30 s");
  return o;
}

Outcome thick_ideals_count() {
  Outcome o;
  for (int n = 1; n <= bn::kMaxN; ++n) {
    Shadow s = bn::build_bn(n);
    GreenStructure g(s);
    std::size_t ideals = thick_ideals(g).size();
    o.require(ideals == upset_count(g.poset()), "antichain/up-set mismatch at n=" + std::to_string(n));
    o.require(ideals == static_cast<std::size_t>(n / 2 + 2), "B_" + std::to_string(n) + " count differs");
  }
  for (clebsch::Value k : {0, 1, 5, 25}) {
    Shadow w = clebsch::window_shadow(k);
    GreenStructure g(w);
    o.require(thick_ideals(g).size() == upset_count(g.poset()), "window count mismatch");
  }
  return o;
}

std::string capture(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"verify", "bn", "--n", "2..6"}, {"verify", "clebsch"}, {"verify", "schur", "--n", "1..3", "--r", "1..6"}};
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0, c3 = 0;
    setenv("FIATCELL_THREADS", "1", 1);
    std::string serial = capture(args, c1);
    std::string again = capture(args, c2);
    setenv("FIATCELL_THREADS", "256", 1);
    std::string wide = capture(args, c3);
    o.require(c1 == 0 && c2 == 0 && c3 == 0, "verify " + args[1] + " did not pass");
    o.require(serial == again && serial == wide, "verify " + args[1] + " output differs between runs");
  }
  unsetenv("FIATCELL_THREADS");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string artifact = argc > 1 ? argv[1] : "recursion_outcome.json";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"B_n construction, associativity and hom counts (n = 1..6)", bn_construction},
      {"commutation and divided-power relations in every B_n", relations},
      {"B_n cell structure (n <= 6)", cells},
      {"cell module of 1_0 equals the defining action (n <= 6)", defining_representation},
      {"closed-form rewriting matches single-step rewriting", oracle_agreement},
      {"index-shift recursion outcome recorded (n = 3..6)", [&] { return recursion(artifact); }},
      {"Clebsch-Gordan associativity, unit and single cell", clebsch_gordan},
      {"Schur combinatorics (n <= 3, r <= 6)", schur_combinatorics},
      {"thick ideals equal antichains of the cell poset", thick_ideals_count},
      {"verify output is byte identical across runs and thread counts", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds_since(start);
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << time.str() << " s]" << (o.note.empty() ? "" : " - " + o.note) << "\n";
  }
  return all ? 0 : 1;
}
