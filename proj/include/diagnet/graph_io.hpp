#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "diagnet/graph.hpp"

namespace diagnet {

enum class GraphFormat { Json, Text };

/// Canonical JSON: {"name", "num_nodes", "edges": [[u,v],...]} plus "labels" when present.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Plain text: a "nodes N" line, then one "u v" line per edge. '#' starts a comment.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::string_view text, std::string name = {});

std::string graph_to_dot(const Graph& g);

std::string write_graph(const Graph& g, GraphFormat format);

/// Reads JSON or text, sniffing the format from the first non-blank character.
/// Throws InputError on unreadable or malformed files.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace diagnet
