#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/chromatic.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/resolution.hpp"

namespace smallcover {

using Json = nlohmann::ordered_json;

/// Deterministic text form used for every file the library writes: two-space
/// indentation, arrays of scalars on one line, trailing newline.
std::string canonical_dump(const Json& value);

Json to_json(const Polytope& p);
Json to_json(const CharMap& map);
Json to_json(const BadFace& bad);
Json to_json(const std::vector<BadFace>& bad);
Json to_json(const ResolutionStep& step);
Json to_json(const ResolutionReport& report);
Json to_json(const ChromaticCertificate& cert);
Json to_json(const LiftReport& report);

// The from_json functions reject missing or unknown fields with SchemaError
// and invariant violations with InvariantError; messages start with the field.
Polytope polytope_from_json(const Json& j);
CharMap charmap_from_json(const Json& j);
ResolutionReport report_from_json(const Json& j);

/// Parses text; throws ParseError on malformed JSON.
Json parse_json(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Polytope load_polytope(const std::filesystem::path& path);
CharMap load_charmap(const std::filesystem::path& path);
ResolutionReport load_report(const std::filesystem::path& path);

void save(const std::filesystem::path& path, const Polytope& p);
void save(const std::filesystem::path& path, const CharMap& map);
void save(const std::filesystem::path& path, const ResolutionReport& report);

}  // namespace smallcover
