#include "diagnet/conditions.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

std::string_view to_string(Theorem th) {
    switch (th) {
        case Theorem::T6: return "T6";
        case Theorem::T7: return "T7";
        case Theorem::T9: return "T9";
        case Theorem::T10: return "T10";
    }
    return "?";
}

bool ConditionReport::applies(Theorem th) const {
    return std::find(applicable.begin(), applicable.end(), th) != applicable.end();
}

std::optional<std::size_t> ConditionReport::certified_bound(DiagnosisModel model, Strategy strategy) const {
    if (!regular_degree) return std::nullopt;
    const std::size_t r = *regular_degree;
    const bool pmc = model == DiagnosisModel::Pmc;
    if (strategy == Strategy::Precise) {
        if (applies(pmc ? Theorem::T6 : Theorem::T7)) return r;
    } else {
        if (applies(pmc ? Theorem::T9 : Theorem::T10)) return 2 * r - 2;
    }
    return std::nullopt;
}

ConditionReport check_conditions(const Graph& g) {
    if (g.num_nodes() < 2) throw DomainError("condition check needs at least 2 nodes");
    ConditionReport rep;
    rep.num_nodes = g.num_nodes();
    rep.regular_degree = is_regular(g);
    rep.triangle_free = is_triangle_free(g);
    rep.distinct_neighborhoods = !has_duplicate_neighborhoods(g);
    rep.max_common_neighbors = max_common_neighbors(g);
    rep.common_neighbor_bound_ok = rep.max_common_neighbors <= 2;

    if (rep.regular_degree) {
        const std::size_t r = *rep.regular_degree;
        const std::size_t n = g.num_nodes();
        if (n == 8 && r == 3) rep.iso_g8 = is_isomorphic(g, generate_exceptional(G8{}));
        if (r >= 1 && n == 2 * r + 2) rep.iso_crown = is_isomorphic(g, generate_exceptional(Crown{static_cast<int>(r + 1)}));
        if (n == 16 && r == 5) rep.iso_g5 = is_isomorphic(g, generate_exceptional(G5{}));

        if (r >= 2 && rep.triangle_free && rep.distinct_neighborhoods) rep.applicable.push_back(Theorem::T6);
        if (r >= 3 && rep.triangle_free && rep.distinct_neighborhoods && !rep.iso_g8 && !rep.iso_crown)
            rep.applicable.push_back(Theorem::T7);
        if (r >= 5 && rep.triangle_free && rep.common_neighbor_bound_ok && !rep.iso_g5)
            rep.applicable.push_back(Theorem::T9);
        if (r >= 6 && rep.triangle_free && rep.common_neighbor_bound_ok) rep.applicable.push_back(Theorem::T10);
    }
    return rep;
}

Table1Row table1_row(const TopologySpec& spec) {
    Graph g = generate(spec);
    return Table1Row{spec, family_key(spec), display_name(spec), check_conditions(g)};
}

namespace {

nlohmann::ordered_json optional_json(const std::optional<std::size_t>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const ConditionReport& rep) {
    nlohmann::ordered_json out;
    out["num_nodes"] = rep.num_nodes;
    out["regular_degree"] = optional_json(rep.regular_degree);
    out["triangle_free"] = rep.triangle_free;
    out["distinct_neighborhoods"] = rep.distinct_neighborhoods;
    out["max_common_neighbors"] = rep.max_common_neighbors;
    out["common_neighbor_bound_ok"] = rep.common_neighbor_bound_ok;
    out["iso_g8"] = rep.iso_g8;
    out["iso_crown"] = rep.iso_crown;
    out["iso_g5"] = rep.iso_g5;
    out["applicable_theorems"] = nlohmann::ordered_json::array();
    for (Theorem th : rep.applicable) out["applicable_theorems"].push_back(to_string(th));
    nlohmann::ordered_json bounds;
    for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
        for (auto strategy : {Strategy::Precise, Strategy::Pessimistic})
            bounds[fmt::format("{}_{}", to_string(model), to_string(strategy))] =
                optional_json(rep.certified_bound(model, strategy));
    out["certified_bounds"] = bounds;
    return out;
}

nlohmann::ordered_json to_json(const Table1Row& row) {
    nlohmann::ordered_json out;
    out["family"] = row.family;
    out["name"] = row.name;
    out["report"] = to_json(row.report);
    return out;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const ConditionReport& rep, std::string_view name) {
    std::string out;
    if (!name.empty()) out += fmt::format("graph: {}\n", name);
    out += fmt::format("nodes: {}\n", rep.num_nodes);
    out += fmt::format("regular degree: {}\n", rep.regular_degree ? std::to_string(*rep.regular_degree) : "not regular");
    out += fmt::format("triangle-free: {}\n", yes_no(rep.triangle_free));
    out += fmt::format("distinct neighborhoods: {}\n", yes_no(rep.distinct_neighborhoods));
    out += fmt::format("max common neighbors: {} (bound <= 2: {})\n", rep.max_common_neighbors,
                       yes_no(rep.common_neighbor_bound_ok));
    out += fmt::format("isomorphic to G_8: {}\n", yes_no(rep.iso_g8));
    out += fmt::format("isomorphic to the crown graph G_{{r+1,r+1}}: {}\n", yes_no(rep.iso_crown));
    out += fmt::format("isomorphic to G_5: {}\n", yes_no(rep.iso_g5));
    std::string theorems;
    for (Theorem th : rep.applicable) theorems += (theorems.empty() ? "" : ", ") + std::string(to_string(th));
    out += fmt::format("applicable theorems: {}\n", theorems.empty() ? "none" : theorems);
    for (auto model : {DiagnosisModel::Pmc, DiagnosisModel::MmStar})
        for (auto strategy : {Strategy::Precise, Strategy::Pessimistic})
            if (auto b = rep.certified_bound(model, strategy))
                out += fmt::format("certified lower bound ({} {}): {}\n", to_string(model), to_string(strategy), *b);
    return out;
}

std::string render_table1(const std::vector<Table1Row>& rows) {
    std::string out = fmt::format("{:<12} {:>6} {:>4} {:>8} {:>9} {:>8} {:>6} {:>10} {:>6}  {}\n", "network", "nodes",
                                  "r", "tri-free", "N(u)!=N(v)", "common<=2", "!=G_8", "!=G_r+1,r+1", "!=G_5",
                                  "theorems");
    for (const auto& row : rows) {
        const auto& r = row.report;
        std::string theorems;
        for (Theorem th : r.applicable) theorems += (theorems.empty() ? "" : ",") + std::string(to_string(th));
        out += fmt::format("{:<12} {:>6} {:>4} {:>8} {:>10} {:>9} {:>6} {:>11} {:>6}  {}\n", row.name, r.num_nodes,
                           r.regular_degree ? std::to_string(*r.regular_degree) : "-", yes_no(r.triangle_free),
                           yes_no(r.distinct_neighborhoods), yes_no(r.common_neighbor_bound_ok), yes_no(!r.iso_g8),
                           yes_no(!r.iso_crown), yes_no(!r.iso_g5), theorems.empty() ? "-" : theorems);
    }
    return out;
}

}  // namespace diagnet
