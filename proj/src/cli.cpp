#include "fiatcell/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "fiatcell/audit.hpp"
#include "fiatcell/bn.hpp"
#include "fiatcell/clebsch.hpp"
#include "fiatcell/errors.hpp"
#include "fiatcell/green.hpp"
#include "fiatcell/ideals.hpp"
#include "fiatcell/schur.hpp"
#include "fiatcell/shadow_json.hpp"

namespace fiatcell::cli {

namespace {

struct Options {
  std::string construction;
  std::string path;
  std::string n_text;
  std::string r_text;
  std::optional<long long> max;
  std::string output;
  std::string report;
  std::string dot;
  std::string kind = "two-sided";
  std::string left_cell_of;
  std::string format = "json";
};

/// Sink for one artifact: a file when a path is given, otherwise `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_text(path, text);
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

int single_int(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  auto [lo, hi] = parse_range(text);
  if (lo != hi) throw InputError(std::string(flag) + " expects a single integer");
  return lo;
}

Json names(const Shadow& s, const ElementSet& set) {
  Json j = Json::array();
  for (ElementId x : set) j.push_back(s.element(x).name);
  return j;
}

Json wrap(const std::string& construction, const std::vector<Report>& reports) {
  Json j;
  j["format"] = 1;
  j["construction"] = construction;
  bool ok = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  j["status"] = ok ? "pass" : "fail";
  Json list = Json::array();
  for (const Report& r : reports) list.push_back(r.to_json());
  j["reports"] = std::move(list);
  return j;
}

int status_of(const Json& j) { return j.at("status") == "pass" ? kExitPass : kExitFail; }

int do_build(const Options& o, std::ostream& out) {
  if (o.construction == "bn") {
    emit(o.output, dump_shadow(bn::build_bn(single_int(o.n_text, "--n"))), out);
    return kExitPass;
  }
  if (o.construction == "clebsch") {
    if (!o.max || *o.max < 0) throw InputError("build clebsch needs --max K with K >= 0");
    emit(o.output, dump_shadow(clebsch::window_shadow(static_cast<clebsch::Value>(*o.max))), out);
    return kExitPass;
  }
  if (o.construction == "schur") {
    Json j = schur::schur_report_json(single_int(o.n_text, "--n"), single_int(o.r_text, "--r"));
    emit(o.report.empty() ? o.output : o.report, dump(j), out);
    return status_of(j.at("checks"));
  }
  throw InputError("build expects bn, clebsch or schur, got '" + o.construction + "'");
}

int do_verify(const Options& o, std::ostream& out) {
  std::vector<Report> reports;
  if (o.construction == "bn") {
    auto [lo, hi] = parse_range(o.n_text.empty() ? "2..6" : o.n_text);
    for (int n = lo; n <= hi; ++n) reports.push_back(bn::verify_bn(n));
  } else if (o.construction == "clebsch") {
    long long max = o.max.value_or(25);
    if (max < 0) throw InputError("--max must be nonnegative");
    reports.push_back(clebsch::verify_clebsch(static_cast<clebsch::Value>(max)));
  } else if (o.construction == "schur") {
    auto [n_lo, n_hi] = parse_range(o.n_text.empty() ? "1..3" : o.n_text);
    auto [r_lo, r_hi] = parse_range(o.r_text.empty() ? "1..6" : o.r_text);
    for (int n = n_lo; n <= n_hi; ++n)
      for (int r = r_lo; r <= r_hi; ++r) reports.push_back(schur::verify_schur(n, r));
  } else if (o.construction == "file") {
    if (o.path.empty()) throw InputError("verify file needs a path");
    reports.push_back(audit_shadow(load_shadow(o.path)));
  } else {
    throw InputError("verify expects bn, clebsch, schur or file, got '" + o.construction + "'");
  }
  Json j = wrap(o.construction, reports);
  emit(o.output, dump(j), out);
  return status_of(j);
}

int do_check(const Options& o, std::ostream& out) {
  Json j = wrap("file", {audit_shadow(load_shadow(o.path))});
  emit(o.output, dump(j), out);
  return status_of(j);
}

int do_cells(const Options& o, std::ostream& out) {
  Shadow s = load_shadow(o.path);
  GreenStructure g(s);
  CellKind kind = parse_cell_kind(o.kind);
  const CellPartition& part = g.cells(kind);
  Json cells = Json::array();
  for (const ElementSet& cls : part.classes) cells.push_back(names(s, cls));
  Json j;
  j["format"] = 1;
  j["kind"] = to_string(kind);
  j["cells"] = std::move(cells);
  Json covers = Json::array();
  for (const auto& [lo, hi] : g.poset().covers) covers.push_back({lo, hi});
  j["poset_covers"] = std::move(covers);
  if (!o.dot.empty()) write_text(o.dot, poset_to_dot(s, g.poset()));
  emit(o.output, dump(j), out);
  return kExitPass;
}

int do_ideals(const Options& o, std::ostream& out) {
  Shadow s = load_shadow(o.path);
  GreenStructure g(s);
  Json list = Json::array();
  auto ideals = thick_ideals(g);
  for (const ThickIdeal& ideal : ideals) list.push_back({{"antichain", ideal.antichain}, {"elements", names(s, ideal.elements)}});
  Json j;
  j["format"] = 1;
  j["count"] = ideals.size();
  j["ideals"] = std::move(list);
  emit(o.output, dump(j), out);
  return kExitPass;
}

int do_cell_module(const Options& o, std::ostream& out) {
  if (o.left_cell_of.empty()) throw InputError("cell-module needs --left-cell-of NAME");
  Shadow s = load_shadow(o.path);
  GreenStructure g(s);
  const CellPartition& lefts = g.cells(CellKind::left);
  const ElementSet& cell = lefts.classes[lefts.class_of[s.at(o.left_cell_of)]];
  CellModuleMatrices module = cell_module(s, cell);

  bool representation = true;
  for (ElementId a = 0; a < s.size() && representation; ++a)
    for (ElementId b = 0; b < s.size() && representation; ++b) {
      if (!s.composable(a, b) || s.truncated(a, b)) continue;
      IntMatrix sum(cell.size(), cell.size());
      for (const auto& [c, m] : s.product(a, b).terms()) sum.add(module.matrices[c], static_cast<std::int64_t>(m));
      if (module.matrices[a] * module.matrices[b] != sum) representation = false;
    }

  Json matrices = Json::object();
  for (ElementId a = 0; a < s.size(); ++a) {
    Json rows = Json::array();
    const IntMatrix& m = module.matrices[a];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    matrices[s.element(a).name] = std::move(rows);
  }
  Json j;
  j["format"] = 1;
  j["basis"] = names(s, module.basis);
  j["representation_property"] = representation;
  j["matrices"] = std::move(matrices);
  emit(o.output, dump(j), out);
  return representation ? kExitPass : kExitFail;
}

int do_export(const Options& o, std::ostream& out) {
  Shadow s = load_shadow(o.path);
  if (o.format == "json") {
    emit(o.output, dump_shadow(s), out);
  } else if (o.format == "dot") {
    emit(o.output, poset_to_dot(s, cell_poset(s)), out);
  } else {
    throw InputError("--format expects json or dot");
  }
  return kExitPass;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw InputError("malformed range '" + text + "'");
    return value;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = to_int(text);
    return {v, v};
  }
  int lo = to_int(text.substr(0, dots));
  int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw InputError("empty range '" + text + "'");
  return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells, ideals and cell modules of decategorified fiat 2-categories", "fiatcell"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build bn, clebsch or schur");
  build->add_option("construction", o.construction)->required();
  build->add_option("--n", o.n_text);
  build->add_option("--r", o.r_text);
  build->add_option("--max", o.max);
  build->add_option("-o,--output", o.output);
  build->add_option("--report", o.report);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("construction", o.construction)->required();
  verify->add_option("path", o.path);
  verify->add_option("--n", o.n_text, "Integer or range a..b");
  verify->add_option("--r", o.r_text, "Integer or range a..b");
  verify->add_option("--max", o.max);
  verify->add_option("-o,--output", o.output);

  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("shadow", o.path)->required();
    sub->add_option("-o,--output", o.output);
    return sub;
  };
  auto* check = file_command("check", "Audit a shadow file");
  auto* cells = file_command("cells", "Cell partition and poset");
  cells->add_option("--kind", o.kind)->check(CLI::IsMember({"left", "right", "two-sided"}));
  cells->add_option("--dot", o.dot);
  auto* ideals = file_command("ideals", "Thick ideals");
  auto* module = file_command("cell-module", "Cell module matrices");
  module->add_option("--left-cell-of", o.left_cell_of)->required();
  auto* exporter = file_command("export", "Re-emit a shadow as JSON or its poset as DOT");
  exporter->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (build->parsed()) return do_build(o, out);
    if (verify->parsed()) return do_verify(o, out);
    if (check->parsed()) return do_check(o, out);
    if (cells->parsed()) return do_cells(o, out);
    if (ideals->parsed()) return do_ideals(o, out);
    if (module->parsed()) return do_cell_module(o, out);
    if (exporter->parsed()) return do_export(o, out);
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace fiatcell::cli
