#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "diagnet/conditions.hpp"
#include "diagnet/topologies.hpp"

namespace paper {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// One properties-table row evaluated at concrete parameters; empty means the
/// table makes no claim at these parameters.
struct Table1Claims {
    std::optional<std::size_t> r;
    std::optional<bool> triangle_free;
    std::optional<bool> iso_crown;
    std::optional<bool> iso_g8;
    std::optional<bool> iso_g5;
    std::optional<bool> distinct_neighborhoods;
    std::optional<bool> common_neighbor_bound_ok;
};

inline std::optional<bool> yes_if(bool condition) { return condition ? std::optional<bool>(true) : std::nullopt; }

inline Table1Claims table1_claims(const diagnet::TopologySpec& spec) {
    using namespace diagnet;
    auto cube_like = [](int n, std::optional<bool> g8) {
        return Table1Claims{static_cast<std::size_t>(n), true, false, g8, false, yes_if(n >= 3), yes_if(n >= 2)};
    };
    return std::visit(
        overloaded{
            [&](const Hypercube& p) { return cube_like(p.n, false); },
            [&](const EnhancedHypercube& p) {
                return Table1Claims{static_cast<std::size_t>(p.n + 1), yes_if(p.s >= 2), false, false, false,
                                    yes_if(p.n >= 3), yes_if(p.n >= 2 && p.s != 2)};
            },
            [&](const TwistedCube& p) { return cube_like(p.n, p.n != 3 ? std::optional<bool>(false) : std::nullopt); },
            [&](const CrossedCube& p) { return cube_like(p.n, p.n != 3 ? std::optional<bool>(false) : std::nullopt); },
            [&](const MobiusCube& p) { return cube_like(p.n, p.n != 3 ? std::optional<bool>(false) : std::nullopt); },
            [&](const CubeConnectedCycles& p) {
                return Table1Claims{p.n >= 3 ? std::optional<std::size_t>(3) : std::nullopt, yes_if(p.n != 3), false,
                                    false, false, true, true};
            },
            [&](const Torus& p) {
                return Table1Claims{static_cast<std::size_t>(2 * p.n), yes_if(p.m != 3), false, false, false,
                                    yes_if(p.n >= 3), yes_if(p.n >= 2)};
            },
            [&](const Star& p) {
                return Table1Claims{static_cast<std::size_t>(p.n - 1), true, false, false, false, true, true};
            },
        },
        spec);
}

/// Diagnosabilities table: (precise, pessimistic), identical for PMC and MM*.
inline std::pair<std::size_t, std::size_t> table2_values(const diagnet::TopologySpec& spec) {
    using namespace diagnet;
    auto pair = [](long a, long b) {
        return std::pair<std::size_t, std::size_t>(static_cast<std::size_t>(std::max(0L, a)),
                                                   static_cast<std::size_t>(std::max(0L, b)));
    };
    return std::visit(overloaded{
                          [&](const Hypercube& p) { return pair(p.n, 2L * p.n - 2); },
                          [&](const EnhancedHypercube& p) { return pair(p.n + 1, 2L * p.n); },
                          [&](const TwistedCube& p) { return pair(p.n, 2L * p.n - 2); },
                          [&](const CrossedCube& p) { return pair(p.n, 2L * p.n - 2); },
                          [&](const MobiusCube& p) { return pair(p.n, 2L * p.n - 2); },
                          [&](const CubeConnectedCycles& p) { return pair(p.n + 2, 2L * p.n + 2); },
                          [&](const Torus& p) { return pair(2L * p.n, 4L * p.n - 2); },
                          [&](const Star& p) { return pair(p.n - 1L, 2L * p.n - 4); },
                      },
                      spec);
}

/// Every family instance with n <= 5 (tori also bounded in side length).
inline std::vector<diagnet::TopologySpec> table1_universe() {
    using namespace diagnet;
    std::vector<TopologySpec> out;
    for (int n = 1; n <= 5; ++n) {
        out.push_back(Hypercube{n});
        for (int s = 0; s < n; ++s) out.push_back(EnhancedHypercube{n, s});
        if (n >= 3 && n % 2 == 1) out.push_back(TwistedCube{n});
        out.push_back(MobiusCube{n, 0});
        out.push_back(MobiusCube{n, 1});
        out.push_back(CrossedCube{n});
        out.push_back(CubeConnectedCycles{n});
        const int max_m = n == 1 ? 8 : n == 2 ? 6 : n == 3 ? 4 : 3;
        for (int m = 3; m <= max_m; ++m) out.push_back(Torus{n, m});
        if (n >= 2) out.push_back(Star{n});
    }
    return out;
}

struct Table1Cell {
    std::string network;
    std::string column;
    auto operator<=>(const Table1Cell&) const = default;
};

/**
 * Properties-table cells contradicted by the generated graphs. Each is backed
 * by a certificate in the tests: an explicit isomorphism or an explicit pair
 * of nodes with equal neighborhoods.
 */
inline const std::vector<Table1Cell>& documented_table1_deviations() {
    static const std::vector<Table1Cell> cells{
        {"EQ_{1,0}", "r"},         {"EQ_{2,0}", "r"},        {"EQ_{3,0}", "iso_crown"},
        {"EQ_{3,0}", "r"},         {"EQ_{3,2}", "distinct_neighborhoods"},
        {"EQ_{4,0}", "r"},         {"EQ_{4,3}", "iso_g5"},   {"EQ_{5,0}", "r"},
        {"Q_3", "iso_crown"},      {"S_3", "iso_crown"},     {"T_1(6)", "iso_crown"},
    };
    return cells;
}

inline std::vector<Table1Cell> table1_mismatches(const diagnet::TopologySpec& spec,
                                                 const diagnet::ConditionReport& r) {
    const Table1Claims c = table1_claims(spec);
    const std::string name = diagnet::display_name(spec);
    std::vector<Table1Cell> out;
    auto check = [&](const char* column, const std::optional<bool>& claim, bool actual) {
        if (claim && *claim != actual) out.push_back({name, column});
    };
    if (c.r && r.regular_degree != c.r) out.push_back({name, "r"});
    check("triangle_free", c.triangle_free, r.triangle_free);
    check("iso_crown", c.iso_crown, r.iso_crown);
    check("iso_g8", c.iso_g8, r.iso_g8);
    check("iso_g5", c.iso_g5, r.iso_g5);
    check("distinct_neighborhoods", c.distinct_neighborhoods, r.distinct_neighborhoods);
    check("common_neighbor_bound_ok", c.common_neighbor_bound_ok, r.common_neighbor_bound_ok);
    return out;
}

struct Table2Cell {
    std::string network;
    std::string cell;  // e.g. "mm precise"
    bool operator==(const Table2Cell&) const = default;
};

}  // namespace paper
