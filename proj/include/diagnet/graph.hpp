#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diagnet/node_set.hpp"

namespace diagnet {

using Edge = std::pair<NodeId, NodeId>;

/**
 * Immutable simple undirected graph.
 *
 * Construction validates the edge list: endpoints in range, no self-loops,
 * no duplicate edges. Adjacency is kept both as sorted neighbor lists and as
 * per-node NodeSets, since the searches use the latter for set algebra.
 */
class Graph {
public:
    Graph() = default;

    /// Throws InputError on out-of-range endpoints, self-loops or duplicate edges.
    Graph(std::size_t num_nodes, std::span<const Edge> edges, std::string name = {},
          std::vector<std::string> labels = {});

    std::size_t num_nodes() const noexcept { return adjacency_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    const std::string& name() const noexcept { return name_; }

    /// Optional per-node labels (bit strings, tuples, permutations); empty when absent.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(NodeId v) const;

    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
    const NodeSet& neighbor_set(NodeId v) const { return neighbor_sets_[v]; }
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
    bool adjacent(NodeId u, NodeId v) const { return neighbor_sets_[u].contains(v); }

    /// N(S): union of neighborhoods of the members of S (may intersect S).
    NodeSet neighborhood(const NodeSet& s) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    NodeSet empty_set() const { return NodeSet(num_nodes()); }
    NodeSet all_nodes() const { return NodeSet::full(num_nodes()); }

    /// Structural equality: same node count, edge set, name and labels.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<NodeSet> neighbor_sets_;
    std::size_t num_edges_ = 0;
};

/// Returns r when every node has degree r; empty otherwise (and for the empty graph).
std::optional<std::size_t> is_regular(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Largest |N(u) ∩ N(v)| over distinct u, v. Throws DomainError below 2 nodes.
std::size_t max_common_neighbors(const Graph& g);

/// True when some distinct u, v have N(u) = N(v). Throws DomainError below 2 nodes.
bool has_duplicate_neighborhoods(const Graph& g);

std::size_t min_degree(const Graph& g);

/// Default node limit for is_isomorphic.
inline constexpr std::size_t kIsomorphismNodeLimit = 64;

/**
 * Backtracking isomorphism test with degree and neighbor-degree pruning.
 * Throws CapabilityError when either graph exceeds `node_limit` nodes.
 */
bool is_isomorphic(const Graph& g, const Graph& h, std::size_t node_limit = kIsomorphismNodeLimit);

/// Like is_isomorphic, but returns the bijection (g's node v maps to h's node map[v]).
std::optional<std::vector<NodeId>> find_isomorphism(const Graph& g, const Graph& h,
                                                    std::size_t node_limit = kIsomorphismNodeLimit);

/// Same graph with node v renamed to perm[v]; labels and name are dropped.
Graph relabel(const Graph& g, std::span<const NodeId> perm);

}  // namespace diagnet
