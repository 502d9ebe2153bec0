#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "diagnet/graph.hpp"
#include "diagnet/syndrome.hpp"

namespace oracle {

using Mask = std::uint64_t;

/// Tests of a graph as bit masks, built from the adjacency lists alone.
struct TestTable {
    // PMC: tester u, tested v.
    std::vector<std::pair<int, int>> pmc;
    // MM*: arbiter w comparing u < v.
    struct Comparison {
        int w, u, v;
    };
    std::vector<Comparison> mm;
};

TestTable build_tests(const diagnet::Graph& g);

Mask to_mask(const diagnet::NodeSet& s);
diagnet::NodeSet from_mask(Mask m, std::size_t n);

/// Some syndrome is producible by both fault sets, decided from the test outcome rules.
bool omega_meets(const TestTable& tests, Mask f1, Mask f2, diagnet::DiagnosisModel model);

/// Rules (1)/(2) or (1*)/(2*) checked directly for one syndrome given as result bits.
bool allowable(const TestTable& tests, Mask f, diagnet::DiagnosisModel model, const std::vector<std::uint8_t>& values);

/// Enumerates all 2^|tests| syndromes looking for one allowable for both sets.
bool omega_meets_exhaustive(const TestTable& tests, Mask f1, Mask f2, diagnet::DiagnosisModel model);

/// All fault sets of size at most k over n nodes, as masks.
std::vector<Mask> small_sets(std::size_t n, std::size_t k);

/**
 * Diagnosability by direct definition: scan every pair of sets of size <= t.
 * Meant for graphs of about a dozen nodes.
 */
std::size_t diagnosability(const diagnet::Graph& g, diagnet::DiagnosisModel model, bool pessimistic);

/// Whether (f1, f2) violates level t: sizes <= t, indistinguishable, and for
/// pessimistic also |F1 ∪ F2| > t.
bool violates(const TestTable& tests, Mask f1, Mask f2, std::size_t t, diagnet::DiagnosisModel model,
              bool pessimistic);

/// Hand-rolled generators for property tests.
struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

    diagnet::Graph graph(int n, double p);
    diagnet::Graph connected_graph(int n, double p);
    Mask subset(int n, int max_size);

    std::mt19937_64 rng;
};

}  // namespace oracle

namespace oracle {

/**
 * meets[i][j]: some syndrome is allowable for both sets[i] and sets[j], found by
 * walking all 2^|tests| syndromes (at most 24 tests).
 */
std::vector<std::vector<bool>> exhaustive_meets(const TestTable& tests, diagnet::DiagnosisModel model,
                                                const std::vector<Mask>& sets);

}  // namespace oracle
