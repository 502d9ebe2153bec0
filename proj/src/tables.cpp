#include "diagnet/tables.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>

#include "diagnet/errors.hpp"
#include "diagnet/graph.hpp"

namespace diagnet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int parse_int(std::string_view text, std::string_view setting) {
    int value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0)
        throw ParameterError(fmt::format("bad cap '{}': expected a non-negative integer", setting));
    return value;
}

Theorem theorem_for(DiagnosisModel model, Strategy strategy) {
    if (strategy == Strategy::Precise) return model == DiagnosisModel::Pmc ? Theorem::T6 : Theorem::T7;
    return model == DiagnosisModel::Pmc ? Theorem::T9 : Theorem::T10;
}

bool within_caps(const TopologySpec& spec, const TableCaps& caps) {
    return std::visit(overloaded{
                          [&](const Hypercube& p) { return p.n <= caps.hypercube; },
                          [&](const EnhancedHypercube& p) { return p.n <= caps.enhanced; },
                          [&](const TwistedCube& p) { return p.n <= caps.twisted; },
                          [&](const MobiusCube& p) { return p.n <= caps.mobius; },
                          [&](const CrossedCube& p) { return p.n <= caps.crossed; },
                          [&](const CubeConnectedCycles& p) { return p.n <= caps.ccc; },
                          [&](const Torus& p) { return p.n <= caps.torus_n && p.m <= caps.torus_m; },
                          [&](const Star& p) { return p.n <= caps.star; },
                      },
                      spec);
}

std::string precondition_failures(Theorem th, const ConditionReport& r) {
    std::vector<std::string> failed;
    const std::size_t min_degree = th == Theorem::T6 ? 2 : th == Theorem::T7 ? 3 : th == Theorem::T9 ? 5 : 6;
    if (!r.regular_degree)
        failed.push_back("not regular");
    else if (*r.regular_degree < min_degree)
        failed.push_back(fmt::format("r = {} < {}", *r.regular_degree, min_degree));
    if (!r.triangle_free) failed.push_back("has triangles");
    if ((th == Theorem::T6 || th == Theorem::T7) && !r.distinct_neighborhoods)
        failed.push_back("repeated neighborhoods");
    if ((th == Theorem::T9 || th == Theorem::T10) && !r.common_neighbor_bound_ok)
        failed.push_back(fmt::format("{} common neighbors", r.max_common_neighbors));
    std::string out;
    for (const auto& f : failed) out += (out.empty() ? "" : ", ") + f;
    return out;
}

std::string cell_label(const Table2Cell& c) {
    return fmt::format("{} {}", c.model == DiagnosisModel::Pmc ? "PMC" : "MM*", to_string(c.strategy));
}

}  // namespace

void TableCaps::apply(std::string_view setting) {
    const auto eq = setting.find('=');
    if (eq == std::string_view::npos)
        throw ParameterError(fmt::format("bad cap '{}': expected family=N", setting));
    const std::string_view family = setting.substr(0, eq);
    const std::string_view value = setting.substr(eq + 1);
    if (family == "torus") {
        const auto x = value.find('x');
        if (x == std::string_view::npos) {
            torus_n = torus_m = parse_int(value, setting);
        } else {
            torus_n = parse_int(value.substr(0, x), setting);
            torus_m = parse_int(value.substr(x + 1), setting);
        }
        return;
    }
    const int v = parse_int(value, setting);
    if (family == "all") {
        hypercube = enhanced = twisted = mobius = crossed = ccc = torus_n = torus_m = star = v;
    } else if (family == "hypercube") {
        hypercube = v;
    } else if (family == "enhanced") {
        enhanced = v;
    } else if (family == "twisted") {
        twisted = v;
    } else if (family == "mobius") {
        mobius = v;
    } else if (family == "crossed") {
        crossed = v;
    } else if (family == "ccc") {
        ccc = v;
    } else if (family == "star") {
        star = v;
    } else {
        throw ParameterError(fmt::format("bad cap '{}': unknown family '{}'", setting, family));
    }
}

std::string_view to_string(CellStatus s) {
    switch (s) {
        case CellStatus::TheoremCertified: return "theorem-certified";
        case CellStatus::BruteForceExact: return "brute-force-exact";
        case CellStatus::NotComputedBudget: return "not computed (budget)";
        case CellStatus::NotComputed: return "not computed";
    }
    return "?";
}

std::vector<TopologySpec> table_instances(const TableCaps& caps) {
    const TableCaps d;
    std::vector<TopologySpec> out;
    for (int n = 3; n <= std::max(caps.hypercube, d.hypercube); ++n) out.push_back(Hypercube{n});
    for (int n = 3; n <= std::max(caps.enhanced, d.enhanced); ++n)
        for (int s = 2; s <= n - 1; ++s) out.push_back(EnhancedHypercube{n, s});
    for (int n = 3; n <= std::max(caps.twisted, d.twisted); n += 2) out.push_back(TwistedCube{n});
    for (int n = 3; n <= std::max(caps.mobius, d.mobius); ++n)
        for (int variant = 0; variant <= 1; ++variant) out.push_back(MobiusCube{n, variant});
    for (int n = 3; n <= std::max(caps.crossed, d.crossed); ++n) out.push_back(CrossedCube{n});
    for (int n = 3; n <= std::max(caps.ccc, d.ccc); ++n) out.push_back(CubeConnectedCycles{n});
    for (int n = 1; n <= std::max(caps.torus_n, d.torus_n); ++n)
        for (int m = 3; m <= std::max(caps.torus_m, d.torus_m); ++m) out.push_back(Torus{n, m});
    for (int n = 3; n <= std::max(caps.star, d.star); ++n) out.push_back(Star{n});
    return out;
}

std::pair<std::string, std::size_t> paper_table2_value(const TopologySpec& spec, Strategy strategy) {
    const bool precise = strategy == Strategy::Precise;
    auto linear = [&](const char* a, long va, const char* b, long vb) {
        return precise ? std::pair<std::string, std::size_t>{a, static_cast<std::size_t>(std::max(0L, va))}
                       : std::pair<std::string, std::size_t>{b, static_cast<std::size_t>(std::max(0L, vb))};
    };
    return std::visit(overloaded{
                          [&](const Hypercube& p) { return linear("n", p.n, "2n-2", 2L * p.n - 2); },
                          [&](const EnhancedHypercube& p) { return linear("n+1", p.n + 1, "2n", 2L * p.n); },
                          [&](const TwistedCube& p) { return linear("n", p.n, "2n-2", 2L * p.n - 2); },
                          [&](const MobiusCube& p) { return linear("n", p.n, "2n-2", 2L * p.n - 2); },
                          [&](const CrossedCube& p) { return linear("n", p.n, "2n-2", 2L * p.n - 2); },
                          [&](const CubeConnectedCycles& p) { return linear("n+2", p.n + 2, "2n+2", 2L * p.n + 2); },
                          [&](const Torus& p) { return linear("2n", 2L * p.n, "4n-2", 4L * p.n - 2); },
                          [&](const Star& p) { return linear("n-1", p.n - 1L, "2n-4", 2L * p.n - 4); },
                      },
                      spec);
}

std::string classify_discrepancy(const TopologySpec& spec, const ConditionReport& report, const Table2Cell& cell) {
    if (cell.certified_bound && cell.value && *cell.certified_bound > *cell.value)
        return fmt::format("unexplained: certified bound {} exceeds the exact value {}", *cell.certified_bound,
                           *cell.value);
    if (std::holds_alternative<CubeConnectedCycles>(spec))
        return "ccc row: the tabulated n+2 and 2n+2 exceed what the 3-regular instances reach";
    const std::size_t half = (report.num_nodes + 1) / 2;
    if (cell.paper_value >= half)
        return fmt::format("small order: two complementary halves of size <= {} are indistinguishable, so {} is "
                           "out of reach",
                           half, cell.paper_value);
    const Theorem th = theorem_for(cell.model, cell.strategy);
    if (th == Theorem::T7 && report.iso_crown)
        return fmt::format("exceptional graph: isomorphic to the crown graph G_{{{0},{0}}}", report.num_nodes / 2);
    if (th == Theorem::T7 && report.iso_g8) return "exceptional graph: isomorphic to G_8";
    if (th == Theorem::T9 && report.iso_g5) return "exceptional graph: isomorphic to G_5";
    const std::string failed = precondition_failures(th, report);
    if (!failed.empty()) return fmt::format("theorem preconditions fail: {} needs more ({})", to_string(th), failed);
    return "unexplained";
}

TablesReport build_tables(const TableCaps& caps, const SearchOptions& per_cell) {
    TablesReport out;
    for (const auto& spec : table_instances(caps)) {
        Table1Row t1 = table1_row(spec);
        Table2Row row;
        row.spec = spec;
        row.family = t1.family;
        row.name = t1.name;
        row.num_nodes = t1.report.num_nodes;
        row.report = t1.report;
        const bool compute = within_caps(spec, caps);
        const Graph g = compute ? generate(spec) : Graph();
        for (const auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
            for (const auto strategy : {Strategy::Precise, Strategy::Pessimistic}) {
                Table2Cell cell;
                cell.model = model;
                cell.strategy = strategy;
                std::tie(cell.paper_formula, cell.paper_value) = paper_table2_value(spec, strategy);
                cell.certified_bound = t1.report.certified_bound(model, strategy);
                if (compute) {
                    try {
                        auto r = diagnosability(g, model, strategy, MethodRequest::Brute, per_cell);
                        cell.status = CellStatus::BruteForceExact;
                        cell.value = r.t;
                        cell.witness = std::move(r.witness);
                    } catch (const SearchAborted&) {
                        if (cell.certified_bound) {
                            cell.status = CellStatus::TheoremCertified;
                            cell.value = cell.certified_bound;
                        } else {
                            cell.status = CellStatus::NotComputedBudget;
                        }
                    }
                }
                if (cell.value) {
                    const bool exact = cell.status == CellStatus::BruteForceExact;
                    cell.discrepancy = exact ? *cell.value != cell.paper_value : *cell.value > cell.paper_value;
                    if (exact && cell.certified_bound && *cell.certified_bound > *cell.value) cell.discrepancy = true;
                    if (cell.discrepancy) cell.reason = classify_discrepancy(spec, t1.report, cell);
                }
                row.cells.push_back(std::move(cell));
            }
        out.table1.push_back(std::move(t1));
        out.table2.push_back(std::move(row));
    }
    return out;
}

nlohmann::ordered_json to_json(const Table2Cell& cell) {
    nlohmann::ordered_json out;
    out["model"] = to_string(cell.model);
    out["strategy"] = to_string(cell.strategy);
    out["paper_formula"] = cell.paper_formula;
    out["paper_value"] = cell.paper_value;
    out["status"] = to_string(cell.status);
    out["value"] = cell.value ? nlohmann::ordered_json(*cell.value) : nlohmann::ordered_json(nullptr);
    out["certified_bound"] =
        cell.certified_bound ? nlohmann::ordered_json(*cell.certified_bound) : nlohmann::ordered_json(nullptr);
    out["witness"] = witness_to_json(cell.witness);
    out["discrepancy"] = cell.discrepancy;
    if (cell.discrepancy) out["reason"] = cell.reason;
    return out;
}

nlohmann::ordered_json to_json(const TablesReport& report) {
    nlohmann::ordered_json out;
    out["table1"] = nlohmann::ordered_json::array();
    for (const auto& row : report.table1) out["table1"].push_back(to_json(row));
    out["table2"] = nlohmann::ordered_json::array();
    for (const auto& row : report.table2) {
        nlohmann::ordered_json r;
        r["family"] = row.family;
        r["name"] = row.name;
        r["num_nodes"] = row.num_nodes;
        r["cells"] = nlohmann::ordered_json::array();
        for (const auto& c : row.cells) r["cells"].push_back(to_json(c));
        out["table2"].push_back(std::move(r));
    }
    return out;
}

std::string render_text(const TablesReport& report) {
    std::string out = "Properties\n";
    out += render_table1(report.table1);
    out += "\nDiagnosabilities (computed/tabulated; * = discrepancy, ~ = theorem-certified, - = not computed)\n";
    out += fmt::format("{:<12} {:>6}  {:<16} {:<16} {:<16} {:<16}\n", "network", "|V|", "PMC precise",
                       "PMC pessimistic", "MM* precise", "MM* pessimistic");
    std::vector<std::string> notes;
    for (const auto& row : report.table2) {
        out += fmt::format("{:<12} {:>6}", row.name, row.num_nodes);
        for (const auto& c : row.cells) {
            std::string shown;
            switch (c.status) {
                case CellStatus::BruteForceExact: shown = fmt::format("{}", *c.value); break;
                case CellStatus::TheoremCertified: shown = fmt::format("~{}", *c.value); break;
                case CellStatus::NotComputedBudget: shown = "-budget"; break;
                case CellStatus::NotComputed: shown = "-"; break;
            }
            shown += fmt::format("/{}{}", c.paper_value, c.discrepancy ? "*" : "");
            out += fmt::format("  {:<16}", shown);
            if (c.discrepancy)
                notes.push_back(fmt::format("{} {}: {} vs {} = {}; {}", row.name, cell_label(c), *c.value,
                                            c.paper_formula, c.paper_value, c.reason));
        }
        out += "\n";
    }
    if (!notes.empty()) {
        out += "\nDiscrepancies\n";
        for (const auto& n : notes) out += "  " + n + "\n";
    }
    return out;
}

}  // namespace diagnet
