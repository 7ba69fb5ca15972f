#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "convgraph/graph.hpp"

namespace convgraph {

/// Graph file format: one JSON document per graph with fields `id`,
/// `targeted_vertex`, `vertices` ({id, author, distance, target}) and
/// `edges` ({from, to, weight, sign}); sign serialized as "+"/"-" and an
/// unreachable distance as "INF". Serialization is deterministic
/// (vertices and edges in ascending order).
std::string graph_to_json(const ConvGraph& g);
ConvGraph graph_from_json(const std::string& text);

void save_graph(const ConvGraph& g, const std::filesystem::path& file);
ConvGraph load_graph(const std::filesystem::path& file);

/// Loads every *.json graph in a directory, sorted by file name.
std::vector<ConvGraph> load_graph_dir(const std::filesystem::path& dir);

}  // namespace convgraph
