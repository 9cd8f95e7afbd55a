#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tracegeo/invariants_k.hpp"

namespace tracegeo {

// Group-spec text:
//
//   spec     := (factor ('x' factor)* ('+T' count)? | 'T' count) suffix*
//   factor   := series rank          series in A..G, rank a positive integer
//   suffix   := '@res=' count | '@relative=' path
//
// e.g. "A2", "B3xA1", "D3xA1+T2", "T1", "A1@res=3", "A1xA1@relative=so31.json".
struct ParsedGroupSpec {
  GroupSpec spec;
  std::optional<std::string> relative_path;
};

// Throws ParseError with the byte offset of the first offending character;
// invalid series/rank combinations are reported at the factor's offset.
ParsedGroupSpec parse_group_spec(std::string_view text);

// Canonical text form; parse_group_spec(render(p)) reproduces p.
std::string render(const ParsedGroupSpec& p);

// {"simple_roots": [[int...]...], "nilradical_dims": [int...]}
RelativeDatum relative_datum_from_json(const nlohmann::json& j);

// Parses and, when a relative path is present, loads it into spec.relative.
GroupSpec load_group_spec(std::string_view text);

}  // namespace tracegeo
