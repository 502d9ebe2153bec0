#include <gtest/gtest.h>

#include "diagnet/diagnosability.hpp"
#include "diagnet/distinguishability.hpp"
#include "diagnet/topologies.hpp"
#include "oracles.hpp"

using namespace diagnet;

namespace {

SearchOptions with(SearchAlgorithm algorithm) {
    SearchOptions o;
    o.algorithm = algorithm;
    return o;
}

struct Case {
    Graph g;
    std::string label;
};

std::vector<Case> small_graphs() {
    std::vector<Case> out;
    for (const TopologySpec& spec :
         {TopologySpec{Hypercube{2}}, TopologySpec{Hypercube{3}}, TopologySpec{EnhancedHypercube{3, 2}},
          TopologySpec{TwistedCube{3}}, TopologySpec{MobiusCube{3, 0}}, TopologySpec{MobiusCube{3, 1}},
          TopologySpec{CrossedCube{3}}, TopologySpec{Torus{2, 3}}, TopologySpec{Torus{1, 7}}, TopologySpec{Star{3}}})
        out.push_back({generate(spec), display_name(spec)});
    out.push_back({generate_exceptional(G8{}), "G_8"});
    out.push_back({generate_exceptional(Crown{5}), "G_{5,5}"});
    oracle::Gen gen(51);
    for (int i = 0; i < 40; ++i) {
        const int n = gen.uniform(2, 10);
        out.push_back({i % 2 ? gen.connected_graph(n, gen.uniform(0, 6) / 10.0) : gen.graph(n, gen.uniform(2, 8) / 10.0),
                       "random " + std::to_string(i)});
    }
    return out;
}

}  // namespace

TEST(SearchEquivalence, DecompositionMatchesNaiveAndDefinition) {
    for (const auto& c : small_graphs())
        for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
            for (auto strategy : {Strategy::Precise, Strategy::Pessimistic}) {
                const bool pess = strategy == Strategy::Pessimistic;
                const auto fast = diagnosability(c.g, model, strategy, MethodRequest::Brute, with(SearchAlgorithm::Decomposition));
                const auto naive = diagnosability(c.g, model, strategy, MethodRequest::Brute, with(SearchAlgorithm::Naive));
                const std::size_t expected = oracle::diagnosability(c.g, model, pess);
                EXPECT_EQ(fast.t, expected) << c.label << " " << to_string(model) << " " << to_string(strategy);
                EXPECT_EQ(naive.t, expected) << c.label << " " << to_string(model) << " " << to_string(strategy);
                ASSERT_EQ(fast.witness.has_value(), naive.witness.has_value()) << c.label;
                if (!fast.witness) continue;
                const auto table = oracle::build_tests(c.g);
                for (const auto* w : {&*fast.witness, &*naive.witness})
                    EXPECT_TRUE(oracle::violates(table, oracle::to_mask(w->f1), oracle::to_mask(w->f2), fast.t + 1,
                                                 model, pess))
                        << c.label;
                // Both searches return the least violating pair in (|F1 ∪ F2|, F1, F2) order.
                EXPECT_EQ(fast.witness->f1, naive.witness->f1) << c.label << " " << to_string(model) << " " << to_string(strategy);
                EXPECT_EQ(fast.witness->f2, naive.witness->f2) << c.label << " " << to_string(model) << " " << to_string(strategy);
            }
}

TEST(SearchEquivalence, LevelVerdictsAgreeAtEveryLevel) {
    oracle::Gen gen(52);
    for (int round = 0; round < 30; ++round) {
        const int n = gen.uniform(3, 9);
        const Graph g = gen.connected_graph(n, 0.35);
        const auto table = oracle::build_tests(g);
        for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
            for (auto strategy : {Strategy::Precise, Strategy::Pessimistic})
                for (std::size_t t = 1; t <= g.num_nodes(); ++t) {
                    const bool pess = strategy == Strategy::Pessimistic;
                    bool expected = true;
                    const auto sets = oracle::small_sets(g.num_nodes(), t);
                    for (std::size_t i = 0; i < sets.size() && expected; ++i)
                        for (std::size_t j = i + 1; j < sets.size() && expected; ++j)
                            expected = !oracle::violates(table, sets[i], sets[j], t, model, pess);
                    const auto r = is_diagnosable(g, t, model, strategy);
                    EXPECT_EQ(r.diagnosable(), expected) << "t=" << t;
                }
    }
}
