#include <algorithm>
#include <map>
#include <vector>

#include <fmt/format.h>

#include "diagnet/errors.hpp"
#include "diagnet/graph.hpp"

namespace diagnet {

namespace {

// Colour refinement on the disjoint union of g and h so colours are comparable
// across the two graphs. Returns colours for g's nodes followed by h's.
std::vector<int> refine_colours(const Graph& g, const Graph& h) {
    const std::size_t n = g.num_nodes();
    auto neighbors = [&](std::size_t x) { return x < n ? g.neighbors(static_cast<NodeId>(x)) : h.neighbors(static_cast<NodeId>(x - n)); };
    const std::size_t total = 2 * n;

    std::vector<int> colour(total);
    for (std::size_t x = 0; x < total; ++x) colour[x] = static_cast<int>(neighbors(x).size());

    std::size_t classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> palette;
        std::vector<int> next(total);
        for (std::size_t x = 0; x < total; ++x) {
            std::vector<int> around;
            for (NodeId y : neighbors(x)) around.push_back(colour[x < n ? y : y + n]);
            std::sort(around.begin(), around.end());
            auto [it, inserted] = palette.try_emplace({colour[x], std::move(around)}, static_cast<int>(palette.size()));
            next[x] = it->second;
        }
        colour = std::move(next);
        if (palette.size() == classes) break;
        classes = palette.size();
    }
    return colour;
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h, std::vector<int> colour)
        : g_(g), h_(h), n_(g.num_nodes()), colour_(std::move(colour)), map_(n_, 0), used_(n_, false) {
        // Order g's nodes so that each one has as many earlier neighbours as possible.
        std::vector<bool> placed(n_, false);
        std::vector<int> links(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t best = n_;
            for (std::size_t v = 0; v < n_; ++v) {
                if (placed[v]) continue;
                if (best == n_ || links[v] > links[best] ||
                    (links[v] == links[best] && g_.degree(static_cast<NodeId>(v)) > g_.degree(static_cast<NodeId>(best))))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(static_cast<NodeId>(best));
            for (NodeId w : g_.neighbors(static_cast<NodeId>(best))) ++links[w];
        }
    }

    std::optional<std::vector<NodeId>> run() {
        if (!extend(0)) return std::nullopt;
        return map_;
    }

private:
    bool consistent(std::size_t depth, NodeId u, NodeId c) const {
        for (std::size_t j = 0; j < depth; ++j) {
            NodeId p = order_[j];
            if (g_.adjacent(u, p) != h_.adjacent(c, map_[p])) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == n_) return true;
        NodeId u = order_[depth];
        for (NodeId c = 0; c < n_; ++c) {
            if (used_[c] || colour_[u] != colour_[n_ + c] || !consistent(depth, u, c)) continue;
            map_[u] = c;
            used_[c] = true;
            if (extend(depth + 1)) return true;
            used_[c] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::size_t n_;
    std::vector<int> colour_;
    std::vector<NodeId> order_;
    std::vector<NodeId> map_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<NodeId>> find_isomorphism(const Graph& g, const Graph& h, std::size_t node_limit) {
    if (g.num_nodes() > node_limit || h.num_nodes() > node_limit)
        throw CapabilityError(fmt::format("isomorphism test limited to {} nodes (got {} and {})", node_limit,
                                          g.num_nodes(), h.num_nodes()));
    if (g.num_nodes() != h.num_nodes() || g.num_edges() != h.num_edges()) return std::nullopt;
    const std::size_t n = g.num_nodes();
    if (n == 0) return std::vector<NodeId>{};

    auto colour = refine_colours(g, h);
    std::vector<int> left(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<int> right(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return std::nullopt;

    return Matcher(g, h, std::move(colour)).run();
}

bool is_isomorphic(const Graph& g, const Graph& h, std::size_t node_limit) {
    return find_isomorphism(g, h, node_limit).has_value();
}

}  // namespace diagnet
