#include "fiatcell/shadow_json.hpp"

#include <fstream>
#include <sstream>

#include "fiatcell/errors.hpp"

namespace fiatcell {

Json to_json(const Shadow& s) {
  Json j;
  j["format"] = 1;
  j["partial"] = s.partial();
  j["objects"] = s.objects();
  Json elements = Json::array();
  for (const Element& e : s.elements())
    elements.push_back(
        {{"id", e.name}, {"source", e.source}, {"target", e.target}, {"identity", e.identity}});
  j["elements"] = std::move(elements);
  if (s.has_involution()) {
    Json inv = Json::object();
    for (ElementId a = 0; a < s.size(); ++a) inv[s.element(a).name] = s.element(s.star(a)).name;
    j["involution"] = std::move(inv);
  } else {
    j["involution"] = nullptr;
  }
  Json table = Json::array();
  for (const TableEntry& entry : s.table()) {
    Json result = Json::object();
    for (const auto& [c, m] : entry.result.terms()) result[s.element(c).name] = m;
    Json row = {{"left", s.element(entry.left).name},
                {"right", s.element(entry.right).name},
                {"result", std::move(result)}};
    if (entry.truncated) row["truncated"] = true;
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

std::string dump_shadow(const Shadow& s) { return to_json(s).dump(1) + "\n"; }

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("shadow JSON: missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("shadow JSON: ") + what + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string("shadow JSON: ") + what + " must be a string");
  return j.get<std::string>();
}

ElementId lookup(const std::map<std::string, ElementId>& ids, const std::string& name) {
  auto it = ids.find(name);
  if (it == ids.end()) throw InputError("shadow JSON: unknown element id '" + name + "'");
  return it->second;
}

}  // namespace

Shadow shadow_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("shadow JSON: top level must be an object");
  if (j.contains("format") && (!j["format"].is_number_integer() || j["format"].get<int>() != 1))
    throw InputError("shadow JSON: unsupported format version");
  bool partial = false;
  if (j.contains("partial")) {
    if (!j["partial"].is_boolean()) throw InputError("shadow JSON: 'partial' must be a boolean");
    partial = j["partial"].get<bool>();
  }

  const Json& objects_j = field(j, "objects");
  if (!objects_j.is_array()) throw InputError("shadow JSON: 'objects' must be an array");
  std::vector<int> objects;
  for (const Json& o : objects_j) objects.push_back(as_int(o, "object"));

  const Json& elements_j = field(j, "elements");
  if (!elements_j.is_array()) throw InputError("shadow JSON: 'elements' must be an array");
  std::vector<Element> elements;
  std::map<std::string, ElementId> ids;
  for (const Json& e : elements_j) {
    Element el;
    el.name = as_string(field(e, "id"), "element id");
    el.source = as_int(field(e, "source"), "source");
    el.target = as_int(field(e, "target"), "target");
    const Json& ident = field(e, "identity");
    if (!ident.is_boolean()) throw InputError("shadow JSON: 'identity' must be a boolean");
    el.identity = ident.get<bool>();
    if (!ids.emplace(el.name, elements.size()).second)
      throw InputError("shadow JSON: duplicate element id '" + el.name + "'");
    elements.push_back(std::move(el));
  }

  std::optional<std::vector<ElementId>> involution;
  const Json& inv_j = field(j, "involution");
  if (!inv_j.is_null()) {
    if (!inv_j.is_object()) throw InputError("shadow JSON: 'involution' must be an object or null");
    std::vector<ElementId> inv(elements.size(), elements.size());
    for (const auto& [key, value] : inv_j.items())
      inv[lookup(ids, key)] = lookup(ids, as_string(value, "involution image"));
    for (ElementId v : inv)
      if (v == elements.size()) throw InputError("shadow JSON: involution is not total");
    involution = std::move(inv);
  }

  const Json& table_j = field(j, "table");
  if (!table_j.is_array()) throw InputError("shadow JSON: 'table' must be an array");
  std::vector<TableEntry> table;
  for (const Json& row : table_j) {
    TableEntry entry;
    entry.left = lookup(ids, as_string(field(row, "left"), "left"));
    entry.right = lookup(ids, as_string(field(row, "right"), "right"));
    const Json& result = field(row, "result");
    if (!result.is_object()) throw InputError("shadow JSON: 'result' must be an object");
    for (const auto& [key, value] : result.items()) {
      if (!value.is_number_integer() || value.get<long long>() < 0)
        throw InputError("shadow JSON: multiplicities must be nonnegative integers");
      entry.result.add(lookup(ids, key), value.get<Multiplicity>());
    }
    if (row.contains("truncated")) {
      if (!row["truncated"].is_boolean()) throw InputError("shadow JSON: 'truncated' must be a boolean");
      entry.truncated = row["truncated"].get<bool>();
    }
    table.push_back(std::move(entry));
  }
  return Shadow(std::move(objects), std::move(elements), std::move(table), std::move(involution),
                partial);
}

Shadow parse_shadow(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("shadow JSON: ") + e.what());
  }
  return shadow_from_json(j);
}

Shadow load_shadow(const std::filesystem::path& path) { return parse_shadow(read_text(path)); }

void save_shadow(const Shadow& s, const std::filesystem::path& path) {
  write_text(path, dump_shadow(s));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace fiatcell
