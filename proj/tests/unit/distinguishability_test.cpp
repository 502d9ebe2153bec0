#include <gtest/gtest.h>

#include "diagnet/distinguishability.hpp"
#include "diagnet/errors.hpp"
#include "diagnet/topologies.hpp"
#include "oracles.hpp"

using namespace diagnet;

TEST(Distinguishability, PmcExamples) {
    const Graph q3 = generate(Hypercube{3});
    EXPECT_TRUE(pmc_distinguishable(q3, NodeSet(8, {0}), NodeSet(8, {7})));
    EXPECT_FALSE(pmc_distinguishable(q3, NodeSet(8, {0, 1, 2, 3, 4, 5, 6}), NodeSet(8, {1, 2, 3, 4, 5, 6, 7})));
    // N(0) and N[0]: every neighbor of the lone difference node 0 is faulty in both sets.
    const NodeSet n0(8, {1, 2, 4}), n0_closed(8, {0, 1, 2, 4});
    const auto table = oracle::build_tests(q3);
    EXPECT_TRUE(oracle::omega_meets(table, oracle::to_mask(n0), oracle::to_mask(n0_closed), DiagnosisModel::Pmc));
    EXPECT_FALSE(pmc_distinguishable(q3, n0, n0_closed));
}

TEST(Distinguishability, MmExamples) {
    const Graph q3 = generate(Hypercube{3});
    EXPECT_TRUE(mm_distinguishable(q3, NodeSet(8, {1, 2, 4}), NodeSet(8, {3, 5, 6})));
    EXPECT_FALSE(mm_distinguishable(q3, NodeSet(8, {0, 3, 5}), NodeSet(8, {0, 3, 6})));
    // Non-adjacent singletons with a common neighbor that has another fault-free neighbor.
    EXPECT_TRUE(mm_distinguishable(q3, NodeSet(8, {0}), NodeSet(8, {3})));
    EXPECT_EQ(mm_witness(q3, NodeSet(8, {0}), NodeSet(8, {3})), 1u);
}

TEST(Distinguishability, Errors) {
    const Graph q3 = generate(Hypercube{3});
    EXPECT_THROW(pmc_distinguishable(q3, NodeSet(8, {1}), NodeSet(8, {1})), DomainError);
    EXPECT_THROW(mm_distinguishable(q3, NodeSet(8), NodeSet(8)), DomainError);
    EXPECT_THROW(pmc_distinguishable(q3, NodeSet(9, {1}), NodeSet(8, {2})), InputError);
}

TEST(Distinguishability, WitnessIsSmallestQualifyingNode) {
    const Graph q3 = generate(Hypercube{3});
    EXPECT_EQ(pmc_witness(q3, NodeSet(8, {0}), NodeSet(8, {7})), 1u);
    EXPECT_EQ(distinguishing_node(q3, NodeSet(8, {0}), NodeSet(8, {7}), DiagnosisModel::Pmc), 1u);
    EXPECT_FALSE(distinguishing_node(q3, NodeSet(8, {0, 3, 5}), NodeSet(8, {0, 3, 6}), DiagnosisModel::MmStar));
}

namespace {

// Every pair of distinct fault sets of size <= k is checked against the test-by-test rule.
std::size_t count_mismatches(const Graph& g, std::size_t k) {
    const auto table = oracle::build_tests(g);
    const auto sets = oracle::small_sets(g.num_nodes(), k);
    std::vector<NodeSet> node_sets;
    for (auto m : sets) node_sets.push_back(oracle::from_mask(m, g.num_nodes()));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const bool pmc = !oracle::omega_meets(table, sets[i], sets[j], DiagnosisModel::Pmc);
            const bool mm = !oracle::omega_meets(table, sets[i], sets[j], DiagnosisModel::MmStar);
            bad += pmc_distinguishable(g, node_sets[i], node_sets[j]) != pmc;
            bad += mm_distinguishable(g, node_sets[i], node_sets[j]) != mm;
            bad += pmc_distinguishable(g, node_sets[j], node_sets[i]) != pmc;
        }
    return bad;
}

}  // namespace

TEST(DistinguishabilityProperty, RandomGraphsMatchOmegaRule) {
    oracle::Gen gen(31);
    for (int round = 0; round < 60; ++round) {
        const int n = gen.uniform(1, 9);
        const Graph g = gen.graph(n, gen.uniform(1, 9) / 10.0);
        EXPECT_EQ(count_mismatches(g, 4), 0u) << "round " << round;
    }
}

TEST(DistinguishabilityProperty, LibraryOmegaMatchesRule) {
    oracle::Gen gen(32);
    for (int round = 0; round < 2000; ++round) {
        const int n = gen.uniform(1, 16);
        const Graph g = gen.graph(n, 0.3);
        const auto table = oracle::build_tests(g);
        const oracle::Mask a = gen.subset(n, n), b = gen.subset(n, n);
        for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
            EXPECT_EQ(omega_intersects(g, oracle::from_mask(a, g.num_nodes()), oracle::from_mask(b, g.num_nodes()), model),
                      oracle::omega_meets(table, a, b, model));
    }
}

TEST(DistinguishabilityProperty, SymmetricAndWitnessValid) {
    oracle::Gen gen(33);
    for (int round = 0; round < 2000; ++round) {
        const int n = gen.uniform(2, 14);
        const Graph g = gen.graph(n, 0.35);
        const NodeSet a = oracle::from_mask(gen.subset(n, 5), g.num_nodes());
        const NodeSet b = oracle::from_mask(gen.subset(n, 5), g.num_nodes());
        if (a == b) continue;
        for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar}) {
            const auto w = distinguishing_node(g, a, b, model);
            EXPECT_EQ(w.has_value(), distinguishable(g, b, a, model));
            if (w) {
                EXPECT_FALSE((a | b).contains(*w));
            }
        }
    }
}
