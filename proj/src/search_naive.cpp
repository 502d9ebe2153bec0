#include <bit>

#include <fmt/format.h>

#include "diagnet/errors.hpp"
#include "search_internal.hpp"

namespace diagnet::detail {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kNaiveNodeLimit = 48;

bool above(Mask m, int p) { return p < 63 && (m >> (p + 1)) != 0; }

// Lexicographic order of the sorted member sequences.
bool mask_less(Mask a, Mask b) {
    const Mask x = a ^ b;
    if (x == 0) return false;
    const int p = std::countr_zero(x);
    return (a >> p) & 1u ? above(b, p) : !above(a, p);
}

struct MaskPair {
    int union_size;
    Mask f1, f2;
};

bool pair_less(const MaskPair& a, const MaskPair& b) {
    if (a.union_size != b.union_size) return a.union_size < b.union_size;
    if (a.f1 != b.f1) return mask_less(a.f1, b.f1);
    return mask_less(a.f2, b.f2);
}

NodeSet to_set(Mask m, std::size_t n) {
    NodeSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<NodeId>(std::countr_zero(m)));
    return s;
}

}  // namespace

LevelResult naive_level(const Graph& g, DiagnosisModel model, Strategy strategy, std::size_t t, unsigned jobs,
                        Budget& budget) {
    const std::size_t n = g.num_nodes();
    if (n > kNaiveNodeLimit)
        throw CapabilityError(fmt::format("naive search supports at most {} nodes", kNaiveNodeLimit));
    const bool pessimistic = strategy == Strategy::Pessimistic;
    std::vector<Mask> adj(n, 0);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : g.neighbors(v)) adj[v] |= Mask{1} << u;
    const Mask all = (Mask{1} << n) - 1;

    // All sets of size <= t, smallest first.
    std::vector<Mask> sets{0};
    for (std::size_t k = 1; k <= std::min(t, n); ++k) {
        for (Mask m = (Mask{1} << k) - 1; m <= all;) {
            sets.push_back(m);
            const Mask c = m & (~m + 1);
            const Mask r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }

    auto indistinguishable = [&](Mask f1, Mask f2) {
        const Mask uni = f1 | f2;
        const Mask only1 = f1 & ~f2, only2 = f2 & ~f1, delta = only1 | only2;
        for (Mask out = all & ~uni; out; out &= out - 1) {
            const Mask nb = adj[static_cast<std::size_t>(std::countr_zero(out))];
            if (model == DiagnosisModel::Pmc) {
                if (nb & delta) return false;
            } else {
                if (std::popcount(nb & only1) >= 2 || std::popcount(nb & only2) >= 2) return false;
                if ((nb & ~uni) && (nb & delta)) return false;
            }
        }
        return true;
    };

    std::vector<std::optional<MaskPair>> bests(std::max(1u, jobs));
    auto worker = [&](unsigned w, unsigned k) {
        WorkerOutcome out;
        auto& best = bests[w];
        for (std::size_t i = w; i < sets.size(); i += k) {
            if (!budget.charge(sets.size() - i - 1)) break;
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                ++out.stats.pairs_examined;
                const Mask a = sets[i], b = sets[j];
                const int u = std::popcount(a | b);
                if (pessimistic && static_cast<std::size_t>(u) <= t) continue;
                if (best && u > best->union_size) continue;
                if (!indistinguishable(a, b)) continue;
                MaskPair p = mask_less(a, b) ? MaskPair{u, a, b} : MaskPair{u, b, a};
                if (!best || pair_less(p, *best)) best = p;
            }
        }
        return out;
    };
    WorkerOutcome merged = run_workers(jobs, worker);

    std::optional<MaskPair> best;
    for (auto& b : bests)
        if (b && (!best || pair_less(*b, *best))) best = b;

    LevelResult result;
    result.stats = merged.stats;
    result.stats.sets_enumerated = sets.size();
    if (best) {
        result.verdict = Verdict::NotDiagnosable;
        result.witness = WitnessPair{to_set(best->f1, n), to_set(best->f2, n)};
    } else {
        result.verdict = budget.exhausted() ? Verdict::Aborted : Verdict::Diagnosable;
    }
    return result;
}

}  // namespace diagnet::detail
