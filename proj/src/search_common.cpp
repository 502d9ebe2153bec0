#include <exception>
#include <mutex>

#include "search_internal.hpp"

namespace diagnet {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
    pairs_examined += o.pairs_examined;
    sets_enumerated += o.sets_enumerated;
    subtrees_pruned += o.subtrees_pruned;
    levels_checked += o.levels_checked;
    return *this;
}

namespace detail {

Budget::Budget(const SearchOptions& options) : max_pairs_(options.max_pairs) {
    if (options.max_seconds)
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(*options.max_seconds));
}

bool Budget::charge(std::uint64_t k) {
    if (exhausted()) return false;
    const std::uint64_t before = used_.fetch_add(k, std::memory_order_relaxed);
    const std::uint64_t after = before + k;
    if (after > max_pairs_) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    if (deadline_ && (before >> 12) != (after >> 12) && std::chrono::steady_clock::now() > *deadline_) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

Candidate make_candidate(FaultSet a, FaultSet b) {
    if (lexicographically_less(b, a)) std::swap(a, b);
    Candidate c;
    c.union_size = (a | b).count();
    c.f1 = std::move(a);
    c.f2 = std::move(b);
    return c;
}

bool key_less(const Candidate& a, const Candidate& b) {
    if (a.union_size != b.union_size) return a.union_size < b.union_size;
    if (lexicographically_less(a.f1, b.f1)) return true;
    if (lexicographically_less(b.f1, a.f1)) return false;
    return lexicographically_less(a.f2, b.f2);
}

void offer(std::optional<Candidate>& best, Candidate c) {
    if (!best || key_less(c, *best)) best = std::move(c);
}

WorkerOutcome run_workers(unsigned jobs, const std::function<WorkerOutcome(unsigned, unsigned)>& fn) {
    if (jobs <= 1) return fn(0, 1);
    std::vector<WorkerOutcome> outcomes(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i)
        threads.emplace_back([&, i] {
            try {
                outcomes[i] = fn(i, jobs);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    WorkerOutcome merged;
    for (auto& o : outcomes) {
        merged.stats += o.stats;
        if (o.best) offer(merged.best, std::move(*o.best));
    }
    return merged;
}

NodeSet smallest_outside(const NodeSet& used, std::size_t k) {
    NodeSet out(used.universe_size());
    for (NodeId v = 0; v < used.universe_size() && k > 0; ++v)
        if (!used.contains(v)) {
            out.insert(v);
            --k;
        }
    return out;
}

ConnectedSets::ConnectedSets(const std::vector<NodeSet>& adj, std::size_t max_size)
    : adj_(adj), max_size_(max_size) {}

}  // namespace detail
}  // namespace diagnet
