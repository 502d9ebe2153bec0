#include <set>

#include <gtest/gtest.h>

#include "diagnet/node_set.hpp"
#include "oracles.hpp"

using diagnet::NodeId;
using diagnet::NodeSet;

namespace {

std::set<NodeId> as_std(const NodeSet& s) {
    auto v = s.to_vector();
    return {v.begin(), v.end()};
}

NodeSet random_set(oracle::Gen& gen, std::size_t n) {
    NodeSet s(n);
    for (NodeId v = 0; v < n; ++v)
        if (gen.coin(0.3)) s.insert(v);
    return s;
}

}  // namespace

TEST(NodeSet, InsertEraseContains) {
    NodeSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    EXPECT_EQ(s.count(), 3u);
    EXPECT_TRUE(s.contains(64));
    s.erase(64);
    EXPECT_FALSE(s.contains(64));
    EXPECT_EQ(s.first(), 0u);
    EXPECT_EQ(s.next(0), 129u);
    EXPECT_EQ(s.next(129), 130u);
}

TEST(NodeSet, FullRespectsUniverse) {
    EXPECT_EQ(NodeSet::full(70).count(), 70u);
    EXPECT_EQ(NodeSet::full(0).count(), 0u);
}

TEST(NodeSet, KeepAbove) {
    NodeSet s(100, {3, 40, 64, 65, 99});
    s.keep_above(64);
    EXPECT_EQ(s.to_vector(), (std::vector<NodeId>{65, 99}));
}

TEST(NodeSet, LexicographicOrderOnSortedSequences) {
    EXPECT_TRUE(lexicographically_less(NodeSet(8, {0, 3, 5}), NodeSet(8, {0, 3, 6})));
    EXPECT_TRUE(lexicographically_less(NodeSet(8, {0, 3}), NodeSet(8, {0, 3, 6})));
    EXPECT_FALSE(lexicographically_less(NodeSet(8, {1}), NodeSet(8, {0, 7})));
    EXPECT_FALSE(lexicographically_less(NodeSet(8, {2}), NodeSet(8, {2})));
}

TEST(NodeSetProperty, AlgebraMatchesStdSet) {
    oracle::Gen gen(11);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 150));
        const NodeSet a = random_set(gen, n), b = random_set(gen, n);
        const auto sa = as_std(a), sb = as_std(b);
        std::set<NodeId> uni, inter, diff, sym;
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(uni, uni.end()));
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(inter, inter.end()));
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(diff, diff.end()));
        std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(sym, sym.end()));
        EXPECT_EQ(as_std(a | b), uni);
        EXPECT_EQ(as_std(a & b), inter);
        EXPECT_EQ(as_std(a - b), diff);
        EXPECT_EQ(as_std(a ^ b), sym);
        EXPECT_EQ(a.count(), sa.size());
        const std::vector<NodeId> va(sa.begin(), sa.end()), vb(sb.begin(), sb.end());
        EXPECT_EQ(lexicographically_less(a, b), va < vb);
    }
}
