#pragma once

#include <filesystem>
#include <string>

#include "fiatcell/shadow.hpp"
#include "json.hpp"

namespace fiatcell {

using Json = nlohmann::ordered_json;

/// Shadow JSON, schema version 1:
///
///   { "format": 1, "partial": bool, "objects": [int],
///     "elements": [{"id", "source", "target", "identity"}],
///     "involution": {id: id} | null,
///     "table": [{"left", "right", "result": {id: int}, ["truncated": true]}] }
///
/// Emission is canonical (element order, composable pairs in (left, right)
/// order), so save(load(save(s))) is byte-identical to save(s).
Json to_json(const Shadow& s);
std::string dump_shadow(const Shadow& s);

/// Throws InputError on schema violations and StructureError when the
/// described table breaks the shadow axioms.
Shadow shadow_from_json(const Json& j);
Shadow parse_shadow(const std::string& text);

Shadow load_shadow(const std::filesystem::path& path);
void save_shadow(const Shadow& s, const std::filesystem::path& path);

/// Writes `text` to `path` verbatim; InputError when the file cannot be opened.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace fiatcell
