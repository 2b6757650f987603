#pragma once

#include "assoc/designs.hpp"
#include "assoc/group.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace assoc {

using Json = nlohmann::json;

/// {"conductor": n, "terms": [[exponent, "p/q"], ...]}. A bare rational
/// string or integer is also accepted on input.
Json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j, long default_conductor = 1);

/// Parses text into JSON; ParseError carries the 1-based line of the fault.
Json parse_json_text(std::string_view text);
std::string read_text_file(const std::string& path);
/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

/// {"size": n, "classes": d+1, "relation": [[...], ...]}
Json scheme_to_json(const SchemeData& s);
SchemeData scheme_from_json(const Json& j);
SchemeData parse_scheme_file(std::string_view text);
std::string serialize_scheme(const SchemeData& s);

/// {"conductor": n, "Q": [[entry, ...], ...]}; entries are term lists
/// [[exponent, "p/q"], ...] over the file conductor or rational strings.
Json eigen_to_json(const CycMatrix& Q);
CycMatrix eigen_from_json(const Json& j);
CycMatrix parse_eigen_file(std::string_view text);
std::string serialize_eigen(const CycMatrix& Q);

/// {"order": n, "mult": [[...], ...]}
Json group_to_json(const GroupTable& G);
GroupTable group_from_json(const Json& j);
GroupTable parse_group_file(std::string_view text);
std::string serialize_group(const GroupTable& G);

/// {"conductor": n, "rows": [[entry, ...], ...], "degrees": [...]}
Json characters_to_json(const CharacterTable& T);
CharacterTable characters_from_json(const Json& j);
CharacterTable parse_character_file(std::string_view text);
std::string serialize_characters(const CharacterTable& T);

/// {"weights": ["p/q", ...]} or {"subset": [v, ...]} with 1-based vertices.
WeightedSubset design_from_json(const Json& j, int size);
WeightedSubset parse_design_file(std::string_view text, int size);

/// Comma separated integers, e.g. "1,2,5,6"; empty text gives an empty list.
std::vector<int> parse_index_list(const std::string& text);

/// Aligned plain-text rendering of exact matrices.
std::string render_table(const std::vector<std::vector<std::string>>& cells);
std::string render_matrix(const CycMatrix& M);

}  // namespace assoc
