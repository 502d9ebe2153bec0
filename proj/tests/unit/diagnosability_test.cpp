#include <gtest/gtest.h>

#include "diagnet/diagnosability.hpp"
#include "diagnet/distinguishability.hpp"
#include "diagnet/errors.hpp"
#include "diagnet/topologies.hpp"
#include "oracles.hpp"

using namespace diagnet;

namespace {

constexpr auto kPmc = DiagnosisModel::Pmc;
constexpr auto kMm = DiagnosisModel::MmStar;

std::size_t brute(const Graph& g, DiagnosisModel model, Strategy strategy) {
    return diagnosability(g, model, strategy, MethodRequest::Brute).t;
}

void expect_violation(const Graph& g, const WitnessPair& w, std::size_t t, DiagnosisModel model, bool pessimistic) {
    EXPECT_NE(w.f1, w.f2);
    EXPECT_LE(w.f1.count(), t);
    EXPECT_LE(w.f2.count(), t);
    if (pessimistic) {
        EXPECT_GT((w.f1 | w.f2).count(), t);
    }
    EXPECT_TRUE(omega_intersects(g, w.f1, w.f2, model));
    EXPECT_FALSE(distinguishable(g, w.f1, w.f2, model));
}

}  // namespace

TEST(Diagnosability, LevelExamples) {
    const Graph q3 = generate(Hypercube{3});
    EXPECT_TRUE(is_precise_t_diagnosable(q3, 3, kPmc).diagnosable());
    const auto mm = is_precise_t_diagnosable(q3, 3, kMm);
    ASSERT_EQ(mm.verdict, Verdict::NotDiagnosable);
    ASSERT_TRUE(mm.witness.has_value());
    EXPECT_EQ(mm.witness->f1, NodeSet(8, {0, 3, 5}));
    EXPECT_EQ(mm.witness->f2, NodeSet(8, {0, 3, 6}));
    for (auto model : {kPmc, kMm}) {
        EXPECT_TRUE(is_precise_t_diagnosable(q3, 0, model).diagnosable());
        EXPECT_TRUE(is_pessimistic_tt_diagnosable(q3, 8, model).diagnosable());
    }
    EXPECT_THROW(is_precise_t_diagnosable(q3, 9, kPmc), DomainError);
}

TEST(Diagnosability, PessimisticExamples) {
    const Graph g5 = generate_exceptional(G5{});
    const auto r = is_pessimistic_tt_diagnosable(g5, 8, kPmc);
    ASSERT_EQ(r.verdict, Verdict::NotDiagnosable);
    EXPECT_EQ(r.witness->f1.count(), 8u);
    EXPECT_EQ(r.witness->f2.count(), 8u);
    EXPECT_EQ((r.witness->f1 | r.witness->f2).count(), 16u);
    EXPECT_TRUE(is_pessimistic_tt_diagnosable(generate(Hypercube{4}), 6, kPmc).diagnosable());
}

TEST(Diagnosability, BruteExamples) {
    EXPECT_EQ(brute(generate(Hypercube{3}), kPmc, Strategy::Precise), 3u);
    EXPECT_EQ(brute(generate(Star{4}), kPmc, Strategy::Precise), 3u);
    EXPECT_EQ(brute(generate(Torus{2, 4}), kPmc, Strategy::Precise), 4u);
    EXPECT_EQ(brute(generate(Hypercube{3}), kMm, Strategy::Precise), 2u);
    EXPECT_EQ(brute(generate(Hypercube{3}), kPmc, Strategy::Pessimistic), 3u);
}

TEST(Diagnosability, ResultWitnessViolatesNextLevel) {
    for (const TopologySpec& spec : {TopologySpec{Hypercube{3}}, TopologySpec{Star{4}}, TopologySpec{Torus{2, 3}},
                                     TopologySpec{CubeConnectedCycles{3}}}) {
        const Graph g = generate(spec);
        for (auto model : {kPmc, kMm})
            for (auto strategy : {Strategy::Precise, Strategy::Pessimistic}) {
                const auto r = diagnosability(g, model, strategy, MethodRequest::Brute);
                EXPECT_TRUE(r.exact);
                EXPECT_EQ(r.method, Method::BruteForce);
                ASSERT_TRUE(r.witness.has_value()) << display_name(spec);
                expect_violation(g, *r.witness, r.t + 1, model, strategy == Strategy::Pessimistic);
            }
    }
}

TEST(Diagnosability, TheoremMethod) {
    const auto r = diagnosability(generate(Hypercube{4}), kPmc, Strategy::Precise, MethodRequest::Theorem);
    EXPECT_EQ(r.t, 4u);
    EXPECT_EQ(r.method, Method::TheoremCertified);
    EXPECT_FALSE(r.exact);
    EXPECT_THROW(diagnosability(generate(Hypercube{3}), kMm, Strategy::Precise, MethodRequest::Theorem),
                 InapplicableError);
    EXPECT_THROW(diagnosability(generate(Torus{2, 3}), kPmc, Strategy::Precise, MethodRequest::Theorem),
                 InapplicableError);
}

TEST(Diagnosability, AutoConfirmsTheoremBound) {
    const auto r = diagnosability(generate(Hypercube{4}), kMm, Strategy::Precise, MethodRequest::Auto);
    EXPECT_EQ(r.t, 4u);
    EXPECT_EQ(r.method, Method::Hybrid);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.certified_bound, 4u);
    const auto plain = diagnosability(generate(Torus{2, 3}), kPmc, Strategy::Precise, MethodRequest::Auto);
    EXPECT_EQ(plain.method, Method::BruteForce);
}

TEST(Diagnosability, BudgetAbort) {
    SearchOptions tiny;
    tiny.max_pairs = 10;
    const Graph q4 = generate(Hypercube{4});
    EXPECT_EQ(is_precise_t_diagnosable(q4, 4, kPmc, tiny).verdict, Verdict::Aborted);
    EXPECT_THROW(diagnosability(q4, kPmc, Strategy::Precise, MethodRequest::Brute, tiny), SearchAborted);
    SearchOptions none;
    none.max_pairs = 0;
    const auto fallback = diagnosability(q4, kPmc, Strategy::Precise, MethodRequest::Auto, none);
    EXPECT_EQ(fallback.method, Method::TheoremCertified);
    EXPECT_FALSE(fallback.exact);
    EXPECT_EQ(fallback.t, 4u);
    SearchOptions timed;
    timed.max_seconds = 1e-9;
    EXPECT_THROW(diagnosability(generate(Hypercube{5}), kMm, Strategy::Pessimistic, MethodRequest::Brute, timed),
                 SearchAborted);
}

TEST(Diagnosability, DeterministicAcrossJobCounts) {
    for (const TopologySpec& spec :
         {TopologySpec{Hypercube{4}}, TopologySpec{Star{4}}, TopologySpec{EnhancedHypercube{4, 2}}}) {
        const Graph g = generate(spec);
        for (auto model : {kPmc, kMm})
            for (auto strategy : {Strategy::Precise, Strategy::Pessimistic}) {
                SearchOptions one, four;
                four.jobs = 4;
                const auto a = diagnosability(g, model, strategy, MethodRequest::Brute, one);
                const auto b = diagnosability(g, model, strategy, MethodRequest::Brute, four);
                EXPECT_EQ(a.t, b.t) << display_name(spec);
                ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
                if (a.witness) {
                    EXPECT_EQ(a.witness->f1, b.witness->f1);
                    EXPECT_EQ(a.witness->f2, b.witness->f2);
                }
            }
    }
}

TEST(Diagnosability, PessimisticFailingLevelsAreContiguous) {
    oracle::Gen gen(41);
    for (int round = 0; round < 25; ++round) {
        const int n = gen.uniform(3, 9);
        const Graph g = gen.connected_graph(n, 0.3);
        for (auto model : {kPmc, kMm}) {
            const std::size_t t = brute(g, model, Strategy::Pessimistic);
            for (std::size_t level = 1; level <= g.num_nodes(); ++level)
                EXPECT_EQ(is_pessimistic_tt_diagnosable(g, level, model).diagnosable(),
                          level <= t || level >= g.num_nodes())
                    << "level " << level;
        }
    }
}

TEST(Diagnosability, JsonShape) {
    const auto r = diagnosability(generate(Hypercube{3}), kPmc, Strategy::Precise, MethodRequest::Brute);
    const auto j = to_json(r);
    EXPECT_EQ(j["t"], 3);
    EXPECT_EQ(j["method"], "brute_force");
    EXPECT_TRUE(j["exact"].get<bool>());
    EXPECT_TRUE(j["witness"].is_object());
    EXPECT_GT(j["stats"]["pairs_examined"].get<std::uint64_t>(), 0u);
}

TEST(Diagnosability, ParseErrors) {
    EXPECT_THROW(parse_strategy("optimistic"), ParameterError);
    EXPECT_THROW(parse_method("guess"), ParameterError);
    EXPECT_THROW(parse_model("xyz"), ParameterError);
}
