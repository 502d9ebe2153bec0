#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "diagnet/diagnosability.hpp"

namespace diagnet::detail {

/// Shared pair/time allowance. Once exhausted it stays exhausted.
class Budget {
public:
    explicit Budget(const SearchOptions& options);

    /// Charges k units; returns false once the budget is gone.
    bool charge(std::uint64_t k = 1);
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

private:
    std::uint64_t max_pairs_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

/// A witness candidate ordered by (|F1 ∪ F2|, F1, F2) with F1 lexicographically first.
struct Candidate {
    std::size_t union_size = 0;
    FaultSet f1;
    FaultSet f2;
};

Candidate make_candidate(FaultSet a, FaultSet b);
bool key_less(const Candidate& a, const Candidate& b);
void offer(std::optional<Candidate>& best, Candidate c);

struct WorkerOutcome {
    std::optional<Candidate> best;
    SearchStats stats;
};

/// Runs fn(worker, jobs) on `jobs` threads (inline for one) and merges by least key.
WorkerOutcome run_workers(unsigned jobs, const std::function<WorkerOutcome(unsigned, unsigned)>& fn);

/// The k smallest nodes outside `used`.
NodeSet smallest_outside(const NodeSet& used, std::size_t k);

/**
 * ESU enumeration of the connected node sets of the graph given by `adj`
 * whose least member is `root`. visit(S, closed, size) receives the closed
 * neighborhood of S in that graph and returns false to skip the subtree of
 * supersets grown from S.
 */
class ConnectedSets {
public:
    ConnectedSets(const std::vector<NodeSet>& adj, std::size_t max_size);

    template <class Visit>
    void enumerate(NodeId root, Visit&& visit, SearchStats& stats) const {
        NodeSet s(adj_.size());
        s.insert(root);
        NodeSet closed = adj_[root];
        closed.insert(root);
        NodeSet ext = adj_[root];
        ext.keep_above(root);
        grow(root, s, closed, ext, 1, visit, stats);
    }

private:
    template <class Visit>
    void grow(NodeId root, const NodeSet& s, const NodeSet& closed, const NodeSet& ext, std::size_t size,
              Visit& visit, SearchStats& stats) const {
        ++stats.sets_enumerated;
        if (!visit(s, closed, size)) {
            ++stats.subtrees_pruned;
            return;
        }
        if (size >= max_size_) return;
        NodeSet rest = ext;
        for (NodeId w = rest.first(); w < adj_.size(); w = rest.first()) {
            rest.erase(w);
            NodeSet s2 = s;
            s2.insert(w);
            NodeSet fresh = adj_[w] - closed;
            NodeSet ext2 = rest | fresh.keep_above(root);
            NodeSet closed2 = closed | adj_[w];
            grow(root, s2, closed2, ext2, size + 1, visit, stats);
        }
    }

    const std::vector<NodeSet>& adj_;
    std::size_t max_size_;
};

LevelResult pmc_level(const Graph& g, Strategy strategy, std::size_t t, unsigned jobs, Budget& budget);
LevelResult mm_level(const Graph& g, Strategy strategy, std::size_t t, unsigned jobs, Budget& budget);
LevelResult naive_level(const Graph& g, DiagnosisModel model, Strategy strategy, std::size_t t, unsigned jobs,
                        Budget& budget);

}  // namespace diagnet::detail
