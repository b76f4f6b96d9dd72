#pragma once

#include <string>

#include <json.hpp>

#include "entrocone/diagrams.hpp"
#include "entrocone/geometry.hpp"

namespace entrocone {

using Json = nlohmann::json;

// { "objects": [string], "arrows": [[string, string]] }
Json indexing_to_json(const IndexingCategory& cat);
IndexingCategory indexing_from_json(const Json& j);

// { "atoms": [{ "label": string, "weight": "p/q" }] }
Json space_to_json(const Space& s);
Space space_from_json(const Json& j);

// { "n": int, "support": [{ "tuple": [string], "weight": "p/q" }] }
Json joint_to_json(const JointTable& t);
JointTable joint_from_json(const Json& j);

// { "indexing": {...}, "spaces": { object: space }, "maps":
//   [{ "from": string, "to": string, "map": { label: label } }] }
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// { "cyclic_orders": [int], "terminals": [[[int, ...], ...], ...] }
Json group_rep_to_json(const GroupRep& rep);
GroupRep group_rep_from_json(const Json& j);

// 15 ordered "p/q" strings in the printed coordinate order.
Json vector15_to_json(const std::vector<Rational>& coords);
std::vector<Rational> vector15_from_json(const Json& j);

// Loads a diagram file: full-diagram, plain space (as a Λ1 diagram), group
// descriptor, or generic diagram JSON, detected by keys.
Diagram diagram_from_any_json(const Json& j);

Json load_json_file(const std::string& path); // ParseError on failure

// FNV-1a 64-bit content hash, hex.
std::string file_hash(const std::string& path);

} // namespace entrocone
