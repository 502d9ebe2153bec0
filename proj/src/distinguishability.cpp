#include "diagnet/distinguishability.hpp"

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

namespace {

void check_pair(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    if (f1.universe_size() != g.num_nodes() || f2.universe_size() != g.num_nodes())
        throw InputError(fmt::format("fault sets must range over the graph's {} nodes", g.num_nodes()));
    if (f1 == f2) throw DomainError("distinguishability is defined for distinct fault sets");
}

std::optional<NodeId> pmc_scan(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    const NodeSet uni = f1 | f2;
    const NodeSet delta = f1 ^ f2;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (!uni.contains(v) && g.neighbor_set(v).intersects(delta)) return v;
    return std::nullopt;
}

std::optional<NodeId> mm_scan(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    const NodeSet uni = f1 | f2;
    const NodeSet only1 = f1 - f2;
    const NodeSet only2 = f2 - f1;
    const NodeSet delta = only1 | only2;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (uni.contains(v)) continue;
        const NodeSet& nb = g.neighbor_set(v);
        if (nb.count_common(only1) >= 2 || nb.count_common(only2) >= 2) return v;
        if (!nb.is_subset_of(uni) && nb.intersects(delta)) return v;
    }
    return std::nullopt;
}

}  // namespace

std::optional<NodeId> pmc_witness(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    check_pair(g, f1, f2);
    return pmc_scan(g, f1, f2);
}

std::optional<NodeId> mm_witness(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    check_pair(g, f1, f2);
    return mm_scan(g, f1, f2);
}

bool pmc_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    return pmc_witness(g, f1, f2).has_value();
}

bool mm_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    return mm_witness(g, f1, f2).has_value();
}

bool distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2, DiagnosisModel model) {
    return distinguishing_node(g, f1, f2, model).has_value();
}

std::optional<NodeId> distinguishing_node(const Graph& g, const FaultSet& f1, const FaultSet& f2,
                                          DiagnosisModel model) {
    return model == DiagnosisModel::Pmc ? pmc_witness(g, f1, f2) : mm_witness(g, f1, f2);
}

namespace detail {
bool pmc_distinguishable_unchecked(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    return pmc_scan(g, f1, f2).has_value();
}
bool mm_distinguishable_unchecked(const Graph& g, const FaultSet& f1, const FaultSet& f2) {
    return mm_scan(g, f1, f2).has_value();
}
}  // namespace detail

}  // namespace diagnet
