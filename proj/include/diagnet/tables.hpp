#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagnet/conditions.hpp"
#include "diagnet/diagnosability.hpp"
#include "diagnet/topologies.hpp"

namespace diagnet {

/// Largest family parameter to search by brute force; 0 leaves the family uncomputed.
struct TableCaps {
    int hypercube = 4;
    int enhanced = 4;
    int twisted = 3;
    int mobius = 4;
    int crossed = 4;
    int ccc = 4;
    int torus_n = 2;
    int torus_m = 4;
    int star = 4;

    /// Applies one "family=N" setting ("torus=NxM", "all=N"). Throws ParameterError.
    void apply(std::string_view setting);
};

enum class CellStatus { TheoremCertified, BruteForceExact, NotComputedBudget, NotComputed };

std::string_view to_string(CellStatus s);

struct Table2Cell {
    DiagnosisModel model = DiagnosisModel::Pmc;
    Strategy strategy = Strategy::Precise;
    std::string paper_formula;
    std::size_t paper_value = 0;
    CellStatus status = CellStatus::NotComputed;
    std::optional<std::size_t> value;
    std::optional<std::size_t> certified_bound;
    std::optional<WitnessPair> witness;
    bool discrepancy = false;
    std::string reason;
};

struct Table2Row {
    TopologySpec spec;
    std::string family;
    std::string name;
    std::size_t num_nodes = 0;
    ConditionReport report;
    std::vector<Table2Cell> cells;
};

struct TablesReport {
    std::vector<Table1Row> table1;
    std::vector<Table2Row> table2;
};

/// The instances listed in both tables: every family from its smallest tabulated
/// parameter up to the larger of its cap and the default cap.
std::vector<TopologySpec> table_instances(const TableCaps& caps);

/// Table II value for a family instance, with the formula it came from.
std::pair<std::string, std::size_t> paper_table2_value(const TopologySpec& spec, Strategy strategy);

/// Why a computed value differs from the tabulated one; "unexplained" when no
/// small-parameter cause is found.
std::string classify_discrepancy(const TopologySpec& spec, const ConditionReport& report, const Table2Cell& cell);

/// Each Table II cell gets its own search budget from `per_cell`.
TablesReport build_tables(const TableCaps& caps, const SearchOptions& per_cell);

nlohmann::ordered_json to_json(const Table2Cell& cell);
nlohmann::ordered_json to_json(const TablesReport& report);
std::string render_text(const TablesReport& report);

}  // namespace diagnet
