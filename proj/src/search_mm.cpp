#include <algorithm>
#include <bit>
#include <numeric>

#include <fmt/format.h>

#include "diagnet/errors.hpp"
#include "search_internal.hpp"

namespace diagnet::detail {

namespace {

constexpr std::size_t kMaxDifference = 62;

/*
 * Everything about a symmetric difference D that does not depend on how D
 * is split. Boundary nodes B = N(D) - D are indexed 0..|B|-1; R is the rest
 * of the graph outside D ∪ B.
 *
 * For a split (D1, D2) a boundary node left outside both fault sets must see
 * at most one node of each side and have all its other neighbors faulty.
 * Hence a valid common part is (B - O) ∪ (N(O) ∩ R) for a set O of unforced
 * boundary nodes, independent in G, and its size is |B| - |O| + |N(O) ∩ R|.
 */
class Difference {
public:
    explicit Difference(const Graph& g) : g_(g), index_(g.num_nodes(), -1), sharers_(g.num_nodes()) {}

    void load(const NodeSet& d) {
        const std::size_t n = g_.num_nodes();
        d_ = d;
        members_ = d.to_vector();
        const NodeSet boundary = g_.neighborhood(d) - d;
        bnodes_ = boundary.to_vector();
        const std::size_t nb = bnodes_.size();
        for (std::size_t i = 0; i < nb; ++i) index_[bnodes_[i]] = static_cast<int>(i);

        dmask_.assign(nb, 0);
        badj_.assign(nb, NodeSet(nb));
        rnb_.assign(nb, NodeSet(n));
        for (std::size_t i = 0; i < nb; ++i) {
            for (NodeId u : g_.neighbors(bnodes_[i])) {
                if (d.contains(u)) {
                    auto pos = std::lower_bound(members_.begin(), members_.end(), u) - members_.begin();
                    dmask_[i] |= std::uint64_t{1} << pos;
                } else if (index_[u] >= 0) {
                    badj_[i].insert(static_cast<NodeId>(index_[u]));
                } else {
                    rnb_[i].insert(u);
                    if (sharers_[u].empty()) touched_.push_back(u);
                    sharers_[u].push_back(static_cast<std::uint32_t>(i));
                }
            }
        }
        shared_.clear();
        for (NodeId r : touched_) {
            if (sharers_[r].size() >= 2) shared_.push_back(sharers_[r]);
            sharers_[r].clear();
        }
        touched_.clear();
        for (NodeId b : bnodes_) index_[b] = -1;
    }

    const NodeSet& members_set() const { return d_; }
    const std::vector<NodeId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// Lower bound on the common part over all splits: disjoint demand sets.
    std::size_t lower_bound() {
        const std::size_t nb = bnodes_.size();
        std::vector<std::pair<std::size_t, std::size_t>> demands;
        for (std::size_t i = 0; i < nb; ++i) {
            const int seen = std::popcount(dmask_[i]);
            if (seen >= 3)
                demands.emplace_back(1, i);
            else if (!badj_[i].empty() || !rnb_[i].empty())
                demands.emplace_back(1 + badj_[i].count() + rnb_[i].count(), i);
        }
        std::sort(demands.begin(), demands.end());
        NodeSet taken_b(nb);
        NodeSet taken_r(g_.num_nodes());
        std::size_t packed = 0;
        for (auto [sz, i] : demands) {
            const bool solo = std::popcount(dmask_[i]) >= 3;
            if (taken_b.contains(static_cast<NodeId>(i))) continue;
            if (!solo && (badj_[i].intersects(taken_b) || rnb_[i].intersects(taken_r))) continue;
            taken_b.insert(static_cast<NodeId>(i));
            if (!solo) {
                taken_b |= badj_[i];
                taken_r |= rnb_[i];
            }
            ++packed;
        }
        return packed;
    }

    /**
     * Cheapest common part for the split with D1 = members selected by
     * `side1` (bit i = members()[i]). Returns false when it exceeds `cap`.
     */
    bool min_common(std::uint64_t side1, std::size_t cap, NodeSet& common) {
        const std::size_t nb = bnodes_.size();
        const std::uint64_t all = members_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << members_.size()) - 1;
        const std::uint64_t side2 = all & ~side1;

        free_.assign(nb, false);
        std::size_t nfree = 0;
        for (std::size_t i = 0; i < nb; ++i) {
            if (std::popcount(dmask_[i] & side1) <= 1 && std::popcount(dmask_[i] & side2) <= 1) {
                free_[i] = true;
                ++nfree;
            }
        }
        if (nb > cap && nfree < nb - cap) return false;
        const std::ptrdiff_t required = static_cast<std::ptrdiff_t>(nb) - static_cast<std::ptrdiff_t>(cap);

        // Components of free nodes linked by adjacency or a shared R neighbor.
        parent_.resize(nb);
        std::iota(parent_.begin(), parent_.end(), 0u);
        for (std::size_t i = 0; i < nb; ++i)
            if (free_[i])
                for (NodeId j : badj_[i])
                    if (free_[j]) unite(static_cast<std::uint32_t>(i), j);
        for (const auto& group : shared_) {
            std::int64_t first = -1;
            for (auto i : group)
                if (free_[i]) {
                    if (first < 0)
                        first = i;
                    else
                        unite(static_cast<std::uint32_t>(first), i);
                }
        }
        comps_.clear();
        comp_of_.assign(nb, -1);
        for (std::size_t i = 0; i < nb; ++i) {
            if (!free_[i]) continue;
            auto root = find(static_cast<std::uint32_t>(i));
            if (comp_of_[root] < 0) {
                comp_of_[root] = static_cast<int>(comps_.size());
                comps_.emplace_back();
            }
            comps_[static_cast<std::size_t>(comp_of_[root])].push_back(static_cast<std::uint32_t>(i));
        }

        std::ptrdiff_t remaining = static_cast<std::ptrdiff_t>(nfree);
        std::ptrdiff_t total = 0;
        outside_.clear();
        for (const auto& comp : comps_) {
            remaining -= static_cast<std::ptrdiff_t>(comp.size());
            const std::ptrdiff_t need = required - total - remaining;
            chosen_.clear();
            best_choice_.clear();
            found_ = need <= 0;
            best_gain_ = need <= 0 ? 0 : need - 1;
            comp_ = &comp;
            search(0, NodeSet(nb), NodeSet(g_.num_nodes()), 0);
            if (!found_) return false;
            total += best_gain_;
            outside_.insert(outside_.end(), best_choice_.begin(), best_choice_.end());
        }
        if (total < required) return false;

        common = NodeSet(g_.num_nodes());
        for (NodeId b : bnodes_) common.insert(b);
        for (auto i : outside_) {
            common.erase(bnodes_[i]);
            common |= rnb_[i];
        }
        return true;
    }

    /**
     * Calls fn(common) for every common part (B - O) ∪ (N(O) ∩ R) of the
     * split `side1` whose size is at most `cap`.
     */
    template <class Fn>
    void each_common(std::uint64_t side1, std::size_t cap, Fn&& fn) {
        const std::size_t nb = bnodes_.size();
        const std::uint64_t all = members_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << members_.size()) - 1;
        const std::uint64_t side2 = all & ~side1;
        std::vector<std::uint32_t> candidates;
        for (std::size_t i = 0; i < nb; ++i)
            if (std::popcount(dmask_[i] & side1) <= 1 && std::popcount(dmask_[i] & side2) <= 1)
                candidates.push_back(static_cast<std::uint32_t>(i));
        std::vector<std::uint32_t> chosen;
        NodeSet common(g_.num_nodes());
        auto walk = [&](auto&& self, std::size_t pos, const NodeSet& blocked, const NodeSet& covered) -> void {
            const std::size_t cost = nb - chosen.size() + covered.count();
            std::size_t open = 0;
            for (std::size_t j = pos; j < candidates.size(); ++j)
                if (!blocked.contains(candidates[j])) ++open;
            if (cost > cap + open) return;
            if (pos == candidates.size()) {
                common = covered;
                for (NodeId b : bnodes_) common.insert(b);
                for (auto i : chosen) common.erase(bnodes_[i]);
                fn(static_cast<const NodeSet&>(common));
                return;
            }
            const auto q = candidates[pos];
            if (!blocked.contains(q)) {
                chosen.push_back(q);
                self(self, pos + 1, blocked | badj_[q], covered | rnb_[q]);
                chosen.pop_back();
            }
            self(self, pos + 1, blocked, covered);
        };
        walk(walk, 0, NodeSet(nb), NodeSet(g_.num_nodes()));
    }

private:
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent_[find(a)] = find(b); }

    // Branch and bound maximizing |O| - |N(O) ∩ R| over independent O within one component.
    void search(std::size_t pos, const NodeSet& blocked, const NodeSet& covered, std::ptrdiff_t gain) {
        const auto& comp = *comp_;
        std::ptrdiff_t bound = gain;
        for (std::size_t j = pos; j < comp.size(); ++j)
            if (!blocked.contains(comp[j])) ++bound;
        if (bound <= best_gain_) return;
        if (pos == comp.size()) {
            best_gain_ = gain;
            best_choice_ = chosen_;
            found_ = true;
            return;
        }
        const auto q = comp[pos];
        if (!blocked.contains(q)) {
            const auto fresh = static_cast<std::ptrdiff_t>(rnb_[q].count_outside(covered));
            chosen_.push_back(q);
            search(pos + 1, blocked | badj_[q], covered | rnb_[q], gain + 1 - fresh);
            chosen_.pop_back();
        }
        search(pos + 1, blocked, covered, gain);
    }

    const Graph& g_;
    NodeSet d_;
    std::vector<NodeId> members_;
    std::vector<NodeId> bnodes_;
    std::vector<int> index_;
    std::vector<std::vector<std::uint32_t>> sharers_;
    std::vector<NodeId> touched_;
    std::vector<std::vector<std::uint32_t>> shared_;
    std::vector<std::uint64_t> dmask_;
    std::vector<NodeSet> badj_;
    std::vector<NodeSet> rnb_;

    std::vector<bool> free_;
    std::vector<std::uint32_t> parent_;
    std::vector<int> comp_of_;
    std::vector<std::vector<std::uint32_t>> comps_;
    const std::vector<std::uint32_t>* comp_ = nullptr;
    std::vector<std::uint32_t> chosen_, best_choice_, outside_;
    std::ptrdiff_t best_gain_ = 0;
    bool found_ = false;
};

std::vector<NodeSet> square_adjacency(const Graph& g) {
    std::vector<NodeSet> adj;
    adj.reserve(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        NodeSet a = g.neighborhood(g.neighbor_set(v)) | g.neighbor_set(v);
        a.erase(v);
        adj.push_back(std::move(a));
    }
    return adj;
}

struct SplitContext {
    std::size_t t;
    bool pessimistic;
    std::size_t n;
};

// Builds the pair for a split with common part `common`, padding it for the
// pessimistic strategy so that the union exceeds t.
Candidate build_pair(const SplitContext& ctx, const Difference& diff, std::uint64_t side1, NodeSet common) {
    const auto& m = diff.members();
    if (ctx.pessimistic) {
        const std::size_t u = common.count() + m.size();
        if (ctx.t + 1 > u) common |= smallest_outside(common | diff.members_set(), ctx.t + 1 - u);
    }
    NodeSet f1 = common, f2 = common;
    for (std::size_t i = 0; i < m.size(); ++i) ((side1 >> i) & 1u ? f1 : f2).insert(m[i]);
    return make_candidate(std::move(f1), std::move(f2));
}

// Offers every least-key pair of a split whose cheapest common part is
// `common`. Ties in union size are broken over all admissible common parts.
void offer_split(const SplitContext& ctx, Difference& diff, std::uint64_t side1, const NodeSet& common,
                 std::optional<Candidate>& best) {
    const std::size_t d = diff.size();
    std::size_t cap = common.count();
    if (ctx.pessimistic && cap + d < ctx.t + 1) cap = ctx.t + 1 - d;
    if (best && std::max(common.count() + d, ctx.pessimistic ? ctx.t + 1 : 0) > best->union_size) return;
    diff.each_common(side1, cap, [&](const NodeSet& c) { offer(best, build_pair(ctx, diff, side1, c)); });
}

// Largest common-part size a split may use: the level bound and, once a
// witness exists, the union of the best one.
std::size_t cost_cap(const SplitContext& ctx, std::size_t d, std::size_t largest_side,
                     const std::optional<Candidate>& best) {
    std::size_t cap = ctx.t - largest_side;
    if (best) cap = std::min(cap, best->union_size >= d ? best->union_size - d : 0);
    return cap;
}

}  // namespace

LevelResult mm_level(const Graph& g, Strategy strategy, std::size_t t, unsigned jobs, Budget& budget) {
    const std::size_t n = g.num_nodes();
    const SplitContext ctx{t, strategy == Strategy::Pessimistic, n};
    const std::size_t max_size = std::min(2 * t, n);
    if (max_size > kMaxDifference)
        throw CapabilityError(
            fmt::format("MM* search supports symmetric differences of at most {} nodes", kMaxDifference));
    const auto adj2 = square_adjacency(g);
    const ConnectedSets sets(adj2, max_size);

    // Differences connected in G^2 carrying both sides (or, for the precise
    // strategy, possibly one).
    auto connected_worker = [&](unsigned w, unsigned k) {
        WorkerOutcome out;
        Difference diff(g);
        NodeSet common;
        for (NodeId root = w; root < n && !budget.exhausted(); root += k) {
            sets.enumerate(
                root,
                [&](const NodeSet& d, const NodeSet&, std::size_t size) {
                    if (!budget.charge()) return false;
                    diff.load(d);
                    const std::size_t lb = diff.lower_bound();
                    std::size_t union_cap = 2 * t;
                    if (out.best) union_cap = std::min(union_cap, out.best->union_size);
                    if (lb + size > union_cap) return false;
                    if (lb + (size + 1) / 2 > t) return true;
                    const std::uint64_t splits = std::uint64_t{1} << (size - 1);
                    for (std::uint64_t s = 0; s < splits; ++s) {
                        const std::uint64_t side1 = 1 | (s << 1);
                        const std::size_t d1 = static_cast<std::size_t>(std::popcount(side1));
                        const std::size_t d2 = size - d1;
                        if (ctx.pessimistic && d2 == 0) continue;
                        const std::size_t largest = std::max(d1, d2);
                        if (lb + largest > t) continue;
                        const std::size_t cap = cost_cap(ctx, size, largest, out.best);
                        if (cap < lb) continue;
                        if (!budget.charge()) return false;
                        ++out.stats.pairs_examined;
                        if (diff.min_common(side1, cap, common)) offer_split(ctx, diff, side1, common, out.best);
                    }
                    return true;
                },
                out.stats);
        }
        return out;
    };
    WorkerOutcome merged = run_workers(jobs, connected_worker);

    if (ctx.pessimistic && !budget.exhausted()) {
        // One-sided pieces A with a valid common part of size at most t - |A|;
        // a violation split over two far-apart pieces uses two of these.
        std::vector<std::vector<NodeSet>> found(std::max(1u, jobs));
        auto piece_worker = [&](unsigned w, unsigned k) {
            WorkerOutcome out;
            Difference diff(g);
            NodeSet common;
            for (NodeId root = w; root < n && !budget.exhausted(); root += k) {
                sets.enumerate(
                    root,
                    [&](const NodeSet& d, const NodeSet&, std::size_t size) {
                        if (budget.exhausted()) return false;
                        diff.load(d);
                        const std::size_t lb = diff.lower_bound();
                        if (lb + size > t) return false;
                        if (!budget.charge()) return false;
                        ++out.stats.pairs_examined;
                        const std::uint64_t all = (std::uint64_t{1} << size) - 1;
                        if (diff.min_common(all, t - size, common)) found[w].push_back(d);
                        return true;
                    },
                    out.stats);
            }
            return out;
        };
        merged.stats += run_workers(jobs, piece_worker).stats;

        std::vector<NodeSet> pieces;
        for (auto& f : found) pieces.insert(pieces.end(), f.begin(), f.end());
        std::sort(pieces.begin(), pieces.end(), [](const NodeSet& a, const NodeSet& b) {
            return lexicographically_less(a, b);
        });
        std::vector<NodeSet> reach;
        reach.reserve(pieces.size());
        for (const auto& p : pieces) {
            NodeSet r = p;
            for (NodeId v : p) r |= adj2[v];
            reach.push_back(std::move(r));
        }

        const std::optional<Candidate> connected_best = merged.best;
        auto pair_worker = [&](unsigned w, unsigned k) {
            WorkerOutcome out;
            out.best = connected_best;
            Difference diff(g);
            NodeSet common;
            for (std::size_t i = w; i < pieces.size() && !budget.exhausted(); i += k)
                for (std::size_t j = i + 1; j < pieces.size(); ++j) {
                    if (pieces[j].intersects(reach[i])) continue;
                    const std::size_t a = pieces[i].count(), b = pieces[j].count();
                    const std::size_t largest = std::max(a, b);
                    if (largest > t) continue;
                    const std::size_t cap = cost_cap(ctx, a + b, largest, out.best);
                    if (!budget.charge()) break;
                    ++out.stats.pairs_examined;
                    const NodeSet d = pieces[i] | pieces[j];
                    diff.load(d);
                    std::uint64_t side1 = 0;
                    const auto& m = diff.members();
                    for (std::size_t x = 0; x < m.size(); ++x)
                        if (pieces[i].contains(m[x])) side1 |= std::uint64_t{1} << x;
                    if (diff.min_common(side1, cap, common)) offer_split(ctx, diff, side1, common, out.best);
                }
            return out;
        };
        WorkerOutcome pairs = run_workers(jobs, pair_worker);
        merged.stats += pairs.stats;
        if (pairs.best) offer(merged.best, std::move(*pairs.best));
    }

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
