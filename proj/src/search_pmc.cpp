#include <algorithm>

#include "search_internal.hpp"

namespace diagnet::detail {

namespace {

// Pairs C ∪ D1, C ∪ D2 where D1 is a prefix of the sorted D. For a fixed D
// and C the least pair in key order always has this shape.
void offer_prefix_splits(std::optional<Candidate>& best, const NodeSet& common, const std::vector<NodeId>& d,
                         std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k <= hi; ++k) {
        NodeSet f1 = common;
        NodeSet f2 = common;
        for (std::size_t i = 0; i < d.size(); ++i) (i < k ? f1 : f2).insert(d[i]);
        offer(best, make_candidate(std::move(f1), std::move(f2)));
    }
}

}  // namespace

LevelResult pmc_level(const Graph& g, Strategy strategy, std::size_t t, unsigned jobs, Budget& budget) {
    const std::size_t n = g.num_nodes();
    const bool pessimistic = strategy == Strategy::Pessimistic;
    std::vector<NodeSet> adj;
    adj.reserve(n);
    for (NodeId v = 0; v < n; ++v) adj.push_back(g.neighbor_set(v));
    const ConnectedSets sets(adj, std::min(2 * t, n));

    auto worker = [&](unsigned w, unsigned k) {
        WorkerOutcome out;
        auto union_cap = [&] { return out.best ? std::min(2 * t, out.best->union_size) : 2 * t; };

        // Connected symmetric differences D with C = N(D) - D.
        for (NodeId root = w; root < n && !budget.exhausted(); root += k) {
            sets.enumerate(
                root,
                [&](const NodeSet& d, const NodeSet& closed, std::size_t size) {
                    if (!budget.charge()) return false;
                    ++out.stats.pairs_examined;
                    const std::size_t closed_size = closed.count();
                    if (closed_size > union_cap()) return false;
                    const std::size_t boundary = closed_size - size;
                    if (boundary + (size + 1) / 2 > t) return true;
                    const std::size_t room = t - boundary;
                    const NodeSet common = closed - d;
                    const auto members = d.to_vector();
                    if (!pessimistic) {
                        offer_prefix_splits(out.best, common, members, size > room ? size - room : 0,
                                            std::min(size, room));
                    } else if (size >= 2) {
                        const std::size_t pad = t + 1 > closed_size ? t + 1 - closed_size : 0;
                        offer_prefix_splits(out.best, common | smallest_outside(closed, pad), members,
                                            std::max<std::size_t>(1, size > room ? size - room : 0),
                                            std::min(size - 1, room));
                    }
                    return true;
                },
                out.stats);
        }

        // Non-adjacent singletons {a}, {b}: the only disconnected shape a
        // pessimistic violation can need.
        if (pessimistic) {
            for (NodeId a = w; a < n && !budget.exhausted(); a += k)
                for (NodeId b = a + 1; b < n; ++b) {
                    if (g.adjacent(a, b)) continue;
                    if (!budget.charge()) break;
                    ++out.stats.pairs_examined;
                    NodeSet common = g.neighbor_set(a) | g.neighbor_set(b);
                    const std::size_t c = common.count();
                    if (c + 1 > t || (out.best && std::max(t + 1, c + 2) > out.best->union_size)) continue;
                    NodeSet used = common;
                    used.insert(a);
                    used.insert(b);
                    const std::size_t pad = t + 1 > c + 2 ? t + 1 - (c + 2) : 0;
                    common |= smallest_outside(used, pad);
                    NodeSet f1 = common, f2 = common;
                    f1.insert(a);
                    f2.insert(b);
                    offer(out.best, make_candidate(std::move(f1), std::move(f2)));
                }
        }
        return out;
    };

    WorkerOutcome merged = run_workers(jobs, worker);
    LevelResult result;
    result.stats = merged.stats;
    if (merged.best) {
        result.verdict = Verdict::NotDiagnosable;
        result.witness = WitnessPair{std::move(merged.best->f1), std::move(merged.best->f2)};
    } else {
        result.verdict = budget.exhausted() ? Verdict::Aborted : Verdict::Diagnosable;
    }
    return result;
}

}  // namespace diagnet::detail
