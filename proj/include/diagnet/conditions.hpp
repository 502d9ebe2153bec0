#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagnet/diagnosability.hpp"
#include "diagnet/topologies.hpp"

namespace diagnet {

/// Lower-bound theorems: T6 (PMC precise), T7 (MM* precise), T9 (PMC pessimistic), T10 (MM* pessimistic).
enum class Theorem { T6, T7, T9, T10 };

std::string_view to_string(Theorem th);

struct ConditionReport {
    std::size_t num_nodes = 0;
    std::optional<std::size_t> regular_degree;
    bool triangle_free = false;
    bool distinct_neighborhoods = false;
    std::size_t max_common_neighbors = 0;
    bool common_neighbor_bound_ok = false;
    bool iso_g8 = false;
    /// Isomorphic to G_{r+1,r+1}; only tested when |V| = 2r + 2.
    bool iso_crown = false;
    bool iso_g5 = false;
    std::vector<Theorem> applicable;

    bool applies(Theorem th) const;
    /// r for T6/T7, 2r - 2 for T9/T10, when the matching theorem applies.
    std::optional<std::size_t> certified_bound(DiagnosisModel model, Strategy strategy) const;
};

/// Throws DomainError below 2 nodes.
ConditionReport check_conditions(const Graph& g);

struct Table1Row {
    TopologySpec spec;
    std::string family;
    std::string name;
    ConditionReport report;
};

Table1Row table1_row(const TopologySpec& spec);

nlohmann::ordered_json to_json(const ConditionReport& report);
nlohmann::ordered_json to_json(const Table1Row& row);

/// Multi-line human-readable report.
std::string render_text(const ConditionReport& report, std::string_view name);

/// Aligned table with one line per row, in the column order of the properties table.
std::string render_table1(const std::vector<Table1Row>& rows);

}  // namespace diagnet
