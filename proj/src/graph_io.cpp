#include "diagnet/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

using nlohmann::json;

namespace {
constexpr std::int64_t kMaxNodes = std::int64_t{1} << 24;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json out;
    out["name"] = g.name();
    out["num_nodes"] = g.num_nodes();
    out["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) out["edges"].push_back({u, v});
    if (!g.labels().empty()) out["labels"] = g.labels();
    return out;
}

Graph graph_from_json(const json& j) {
    try {
        if (!j.is_object()) throw InputError("graph JSON must be an object");
        const auto n = j.at("num_nodes").get<std::int64_t>();
        if (n < 0 || n > kMaxNodes) throw InputError(fmt::format("num_nodes must be in [0, {}]", kMaxNodes));
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a [u, v] pair");
            auto u = e[0].get<std::int64_t>();
            auto v = e[1].get<std::int64_t>();
            if (u < 0 || v < 0) throw InputError("negative node id in edge list");
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return Graph(static_cast<std::size_t>(n), edges, j.value("name", std::string{}), std::move(labels));
    } catch (const json::exception& e) {
        throw InputError(fmt::format("malformed graph JSON: {}", e.what()));
    }
}

std::string graph_to_text(const Graph& g) {
    std::string out = fmt::format("nodes {}\n", g.num_nodes());
    for (auto [u, v] : g.edges()) out += fmt::format("{} {}\n", u, v);
    return out;
}

Graph graph_from_text(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string rest;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!n) {
            std::string keyword;
            long long count = -1;
            if (!(fields >> keyword >> count) || keyword != "nodes" || count < 0 || count > kMaxNodes ||
                (fields >> rest))
                throw InputError(fmt::format("line {}: expected 'nodes N'", line_no));
            n = static_cast<std::size_t>(count);
        } else {
            long long u = -1, v = -1;
            if (!(fields >> u >> v) || u < 0 || v < 0 || (fields >> rest))
                throw InputError(fmt::format("line {}: expected 'u v'", line_no));
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        }
    }
    if (!n) throw InputError("missing 'nodes N' header");
    return Graph(*n, edges, std::move(name));
}

std::string graph_to_dot(const Graph& g) {
    std::string out = fmt::format("graph \"{}\" {{\n", g.name());
    for (NodeId v = 0; v < g.num_nodes(); ++v) out += fmt::format("  {} [label=\"{}\"];\n", v, g.label(v));
    for (auto [u, v] : g.edges()) out += fmt::format("  {} -- {};\n", u, v);
    out += "}\n";
    return out;
}

std::string write_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Text) return graph_to_text(g);
    return graph_to_json(g).dump() + "\n";
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot open graph file '{}'", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw InputError(fmt::format("malformed graph JSON in '{}': {}", path.string(), e.what()));
        }
        return graph_from_json(j);
    }
    return graph_from_text(text, path.stem().string());
}

}  // namespace diagnet
