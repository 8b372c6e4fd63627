#pragma once

#include <string>

#include <json.hpp>

#include "cordial/equivalence.hpp"
#include "cordial/labeling.hpp"

namespace cordial {

// Graph JSON: {"order": n, "edges": [[u, v], ...]}. Loaders also accept a
// wrapping object carrying the graph under a "graph" key.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Edge-list text: first line n, then one "u v" pair per line, 0-indexed.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

// Sniffs JSON (leading '{') versus edge-list content.
Graph load_graph(const std::string& path);

// Labeling JSON: {"labels": {"0": 3, "1": 4, ...}} keyed by vertex id.
nlohmann::json labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const nlohmann::json& j);
Labeling load_labeling(const std::string& path);

// Report JSON: {"e0":., "e1":., "cordial":., "edges": [{"u":., "v":.,
// "star":., "residue":., "label":., "reason":"."}]}.
nlohmann::json report_to_json(const EdgeLabelReport& r);

// Witness JSON: {"psi": {"1": 1, "2": 2, ...}}.
nlohmann::json psi_to_json(const EquivalenceWitness& w);
EquivalenceWitness psi_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace cordial
