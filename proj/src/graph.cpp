#include "diagnet/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

Graph::Graph(std::size_t num_nodes, std::span<const Edge> edges, std::string name,
             std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)), adjacency_(num_nodes) {
    if (!labels_.empty() && labels_.size() != num_nodes)
        throw InputError(fmt::format("expected {} labels, got {}", num_nodes, labels_.size()));

    for (auto [u, v] : edges) {
        if (u >= num_nodes || v >= num_nodes)
            throw InputError(fmt::format("edge ({}, {}) out of range for {} nodes", u, v, num_nodes));
        if (u == v) throw InputError(fmt::format("self-loop at node {}", u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (NodeId u = 0; u < num_nodes; ++u) {
        auto& adj = adjacency_[u];
        std::sort(adj.begin(), adj.end());
        if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
            throw InputError(fmt::format("duplicate edge at node {}", u));
    }
    num_edges_ = edges.size();

    neighbor_sets_.reserve(num_nodes);
    for (const auto& adj : adjacency_) neighbor_sets_.push_back(NodeSet::from(num_nodes, adj));
}

std::string Graph::label(NodeId v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

NodeSet Graph::neighborhood(const NodeSet& s) const {
    NodeSet out(num_nodes());
    for (NodeId v : s) out |= neighbor_sets_[v];
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (NodeId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.num_nodes() == 0) return std::nullopt;
    const std::size_t r = g.degree(0);
    for (NodeId v = 1; v < g.num_nodes(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

bool is_triangle_free(const Graph& g) {
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v && g.neighbor_set(u).intersects(g.neighbor_set(v))) return false;
    return true;
}

namespace {

void require_two_nodes(const Graph& g, const char* what) {
    if (g.num_nodes() < 2) throw DomainError(fmt::format("{} needs at least 2 nodes", what));
}

}  // namespace

std::size_t max_common_neighbors(const Graph& g) {
    require_two_nodes(g, "max_common_neighbors");
    // Count 2-paths u - w - v from each u; O(n r^2) instead of O(n^2) pair scans.
    std::vector<std::size_t> count(g.num_nodes(), 0);
    std::vector<NodeId> touched;
    std::size_t best = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId w : g.neighbors(u))
            for (NodeId v : g.neighbors(w)) {
                if (v == u) continue;
                if (count[v]++ == 0) touched.push_back(v);
            }
        for (NodeId v : touched) {
            best = std::max(best, count[v]);
            count[v] = 0;
        }
        touched.clear();
    }
    return best;
}

bool has_duplicate_neighborhoods(const Graph& g) {
    require_two_nodes(g, "has_duplicate_neighborhoods");
    std::vector<std::span<const NodeId>> hoods;
    hoods.reserve(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) hoods.push_back(g.neighbors(v));
    auto less = [](std::span<const NodeId> a, std::span<const NodeId> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::sort(hoods.begin(), hoods.end(), less);
    for (std::size_t i = 1; i < hoods.size(); ++i)
        if (std::equal(hoods[i - 1].begin(), hoods[i - 1].end(), hoods[i].begin(), hoods[i].end())) return true;
    return false;
}

std::size_t min_degree(const Graph& g) {
    std::size_t d = g.num_nodes() == 0 ? 0 : g.degree(0);
    for (NodeId v = 1; v < g.num_nodes(); ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph relabel(const Graph& g, std::span<const NodeId> perm) {
    if (perm.size() != g.num_nodes()) throw DomainError("permutation size does not match graph");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.num_nodes(), edges);
}

}  // namespace diagnet
