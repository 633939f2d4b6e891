#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "fiatcell/cli.hpp"
#include "fiatcell/errors.hpp"
#include "fiatcell/shadow_json.hpp"

using namespace fiatcell;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "fiatcell_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(cli::parse_range("2..6") == std::pair{2, 6});
  CHECK(cli::parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(cli::parse_range("6..2"), InputError);
  CHECK_THROWS_AS(cli::parse_range("x"), InputError);
  CHECK_THROWS_AS(cli::parse_range("2..."), InputError);
}

TEST_CASE("verify bn --n 2") {
  Run r = run({"verify", "bn", "--n", "2"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["format"] == 1);
  CHECK(j["status"] == "pass");
  const Json& checks = j["reports"][0]["checks"];
  auto find = [&](const std::string& name) -> const Json& {
    for (const Json& c : checks)
      if (c["check"] == name) return c;
    FAIL("missing check " << name);
    return checks;
  };
  CHECK(find("indecomposables per hom = min(i,j,n-i,n-j)+1")["details"]["total"] == 10);
  CHECK(find("two-sided cell count = floor(n/2)+1")["details"]["count"] == 2);
  CHECK(find("commutation EF+1^i = FE+1^(n-i)")["status"] == "pass");
  CHECK(find("divided powers X^k = k! X^(k)")["status"] == "pass");
}

TEST_CASE("build, cells, ideals, cell-module, export") {
  fs::path dir = scratch();
  std::string bn4 = (dir / "bn4.json").string();
  std::string dot = (dir / "poset.dot").string();

  REQUIRE(run({"build", "bn", "--n", "4", "-o", bn4}).code == 0);
  Shadow s = load_shadow(bn4);
  CHECK(s.size() == 35);

  Run cells = run({"cells", bn4, "--kind", "two-sided", "--dot", dot});
  CHECK(cells.code == 0);
  CHECK(Json::parse(cells.out)["cells"].size() == 3);
  std::string dot_text = read_text(dot);
  CHECK(dot_text.rfind("digraph cells {", 0) == 0);
  CHECK(dot_text.find("c1 -> c0") != std::string::npos);

  Run left = run({"cells", bn4, "--kind", "left"});
  CHECK(Json::parse(left.out)["cells"].size() == 9);

  Run ideals = run({"ideals", bn4});
  CHECK(ideals.code == 0);
  CHECK(Json::parse(ideals.out)["count"] == 4);

  Run module = run({"cell-module", bn4, "--left-cell-of", "1_0"});
  CHECK(module.code == 0);
  Json m = Json::parse(module.out);
  CHECK(m["basis"].size() == 5);
  CHECK(m["representation_property"] == true);
  CHECK(m["matrices"]["F_0^(1)"][1][0] == 1);

  Run exported = run({"export", bn4});
  CHECK(exported.out == read_text(bn4));
  CHECK(run({"export", bn4, "--format", "dot"}).out == dot_text);

  Run check = run({"check", bn4});
  CHECK(check.code == 0);
  CHECK(run({"verify", "file", bn4}).out == check.out);
}

TEST_CASE("clebsch and schur builds") {
  Run zero = run({"build", "clebsch", "--max", "0"});
  CHECK(zero.code == 0);
  Shadow unit = parse_shadow(zero.out);
  CHECK(unit.size() == 1);
  CHECK(unit.element(0).identity);
  CHECK(unit.partial());

  fs::path report = scratch() / "schur.json";
  CHECK(run({"build", "schur", "--n", "2", "--r", "3", "--report", report.string()}).code == 0);
  Json j = Json::parse(read_text(report));
  CHECK(j["counts"]["matrices"] == 20);
  CHECK(j["counts"]["two_sided_cells"] == 2);

  CHECK(run({"verify", "clebsch"}).code == 0);
  CHECK(run({"verify", "schur", "--n", "1..2", "--r", "1..3"}).code == 0);
}

TEST_CASE("input errors exit with 2") {
  fs::path bad = scratch() / "malformed.json";
  write_text(bad, "{\"objects\": [0], \"elements\": 3}");
  CHECK(run({"cells", bad.string()}).code == 2);
  CHECK(run({"cells", (scratch() / "missing.json").string()}).code == 2);
  CHECK(run({"build", "bn", "--n", "0"}).code == 2);
  CHECK(run({"build", "bn", "--n", "2..3"}).code == 2);
  CHECK(run({"build", "bn", "--frobnicate"}).code == 2);
  CHECK(run({"build", "tensor"}).code == 2);
  CHECK(run({"verify", "bn", "--n", "x"}).code == 2);
  CHECK(run({}).code == 2);

  fs::path bn2 = scratch() / "bn2.json";
  REQUIRE(run({"build", "bn", "--n", "2", "-o", bn2.string()}).code == 0);
  CHECK(run({"cell-module", bn2.string(), "--left-cell-of", "nope"}).code == 2);
  CHECK(run({"cells", bn2.string(), "--kind", "diagonal"}).code == 2);
}

TEST_CASE("failed checks exit with 1") {
  // Associative but with a table that breaks nothing structural: a shadow
  // whose cell-module check cannot fail. Use a non-associative table.
  fs::path file = scratch() / "broken.json";
  Json j = {{"format", 1},
            {"partial", false},
            {"objects", {0}},
            {"elements",
             {{{"id", "1"}, {"source", 0}, {"target", 0}, {"identity", true}},
              {{"id", "x"}, {"source", 0}, {"target", 0}, {"identity", false}},
              {{"id", "y"}, {"source", 0}, {"target", 0}, {"identity", false}}}},
            {"involution", nullptr},
            {"table",
             {{{"left", "1"}, {"right", "1"}, {"result", {{"1", 1}}}},
              {{"left", "1"}, {"right", "x"}, {"result", {{"x", 1}}}},
              {{"left", "1"}, {"right", "y"}, {"result", {{"y", 1}}}},
              {{"left", "x"}, {"right", "1"}, {"result", {{"x", 1}}}},
              {{"left", "x"}, {"right", "x"}, {"result", {{"y", 1}}}},
              {{"left", "x"}, {"right", "y"}, {"result", {{"x", 1}}}},
              {{"left", "y"}, {"right", "1"}, {"result", {{"y", 1}}}},
              {{"left", "y"}, {"right", "x"}, {"result", {{"y", 1}}}},
              {{"left", "y"}, {"right", "y"}, {"result", {{"y", 1}}}}}}};
  write_text(file, j.dump());
  Run r = run({"check", file.string()});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["status"] == "fail");
}

TEST_CASE("outputs are byte identical across runs and thread counts") {
  Run first = run({"verify", "bn", "--n", "2..5"});
  Run second = run({"verify", "bn", "--n", "2..5"});
  CHECK(first.out == second.out);
  fs::path dir = scratch();
  std::string cli = FIATCELL_CLI;
  std::string a = (dir / "serial.json").string(), b = (dir / "parallel.json").string();
  CHECK(std::system(("FIATCELL_THREADS=1 " + cli + " verify bn --n 2..6 -o " + a).c_str()) == 0);
  CHECK(std::system(("FIATCELL_THREADS=64 " + cli + " verify bn --n 2..6 -o " + b).c_str()) == 0);
  CHECK(read_text(a) == read_text(b));
}

TEST_CASE("build, save, load, re-verify") {
  fs::path file = scratch() / "bn5.json";
  REQUIRE(run({"build", "bn", "--n", "5", "-o", file.string()}).code == 0);
  Run once = run({"check", file.string()});
  fs::path again = scratch() / "bn5_again.json";
  REQUIRE(run({"export", file.string(), "-o", again.string()}).code == 0);
  CHECK(read_text(file) == read_text(again));
  CHECK(run({"check", again.string()}).out == once.out);
}
