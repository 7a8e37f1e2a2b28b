// antimagic/io.hpp - labeling JSON and DOT export
//
// Labeling JSON: {"edges":[[u,v],...],"labels":[l1,...]} with parallel arrays.
// Vertex ids must be dense in [0, n) where n is one past the largest id used.

#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "antimagic/forest.hpp"

namespace antimagic {

nlohmann::json labeling_to_json(const Forest& g, const Labeling& f);

// Accepts a bare labeling object or any object carrying one under "labeling".
// Throws parse_error on schema problems, invalid_labeling on a non-bijection.
std::pair<Forest, Labeling> labeling_from_json(const nlohmann::json& doc);

// Undirected graph; each edge carries its label, each vertex its sum.
std::string to_dot(const Forest& g, const Labeling& f, const std::string& name = "G");

nlohmann::json read_json_file(const std::string& path);

}  // namespace antimagic
