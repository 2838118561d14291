#pragma once

#include "gkc/graph.hpp"

#include <json.hpp>

#include <string>

namespace gkc {

inline constexpr const char* kGraphSchema = "gkc.graph/1";

nlohmann::json label_to_json(const Label& l);
Label label_from_json(const nlohmann::json& j);

/// {"schema", "vertices": [label...], "edges": [[label, label]...]} in
/// canonical order, so export followed by import is the identity.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Quotient graph plus a "classes" array of {"label", "members"}.
nlohmann::json compact_to_json(const CompactForm& cf);

std::string to_dot(const Graph& g, const std::string& name = "G");
std::string to_table(const Graph& g);

}  // namespace gkc
