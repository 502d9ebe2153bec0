#include <gtest/gtest.h>

#include "diagnet/errors.hpp"
#include "diagnet/tables.hpp"
#include "paper_tables.hpp"

using namespace diagnet;

namespace {

TableCaps caps_of(std::initializer_list<const char*> settings) {
    TableCaps caps;
    caps.apply("all=0");
    for (const char* s : settings) caps.apply(s);
    return caps;
}

const Table2Cell& cell(const TablesReport& r, const std::string& name, DiagnosisModel model, Strategy strategy) {
    for (const auto& row : r.table2)
        if (row.name == name)
            for (const auto& c : row.cells)
                if (c.model == model && c.strategy == strategy) return c;
    throw std::runtime_error("missing cell " + name);
}

}  // namespace

TEST(TableCaps, Parsing) {
    TableCaps caps;
    caps.apply("torus=3x5");
    EXPECT_EQ(caps.torus_n, 3);
    EXPECT_EQ(caps.torus_m, 5);
    caps.apply("star=2");
    EXPECT_EQ(caps.star, 2);
    caps.apply("all=0");
    EXPECT_EQ(caps.hypercube, 0);
    EXPECT_THROW(caps.apply("cube=3"), ParameterError);
    EXPECT_THROW(caps.apply("star"), ParameterError);
    EXPECT_THROW(caps.apply("star=-1"), ParameterError);
    EXPECT_THROW(caps.apply("torus=2y4"), ParameterError);
}

TEST(Tables, Table2FormulasMatchIndependentCopy) {
    for (const auto& spec : table_instances(TableCaps{})) {
        const auto [precise, pessimistic] = paper::table2_values(spec);
        EXPECT_EQ(paper_table2_value(spec, Strategy::Precise).second, precise);
        EXPECT_EQ(paper_table2_value(spec, Strategy::Pessimistic).second, pessimistic);
    }
}

TEST(Tables, SpecExampleRun) {
    const auto r = build_tables(caps_of({"hypercube=4", "star=4", "torus=2x4"}), SearchOptions{});
    const auto pp = Strategy::Precise;
    EXPECT_EQ(cell(r, "Q_3", DiagnosisModel::Pmc, pp).value, 3u);
    EXPECT_EQ(cell(r, "Q_4", DiagnosisModel::Pmc, pp).value, 4u);
    EXPECT_EQ(cell(r, "S_4", DiagnosisModel::Pmc, pp).value, 3u);
    EXPECT_EQ(cell(r, "T_2(4)", DiagnosisModel::Pmc, pp).value, 4u);
    const auto& q3mm = cell(r, "Q_3", DiagnosisModel::MmStar, pp);
    EXPECT_EQ(q3mm.value, 2u);
    EXPECT_TRUE(q3mm.discrepancy);
    EXPECT_NE(q3mm.reason.find("crown"), std::string::npos);
    EXPECT_EQ(cell(r, "CCC_3", DiagnosisModel::Pmc, pp).status, CellStatus::NotComputed);
    for (const auto& row : r.table2)
        for (const auto& c : row.cells) {
            if (c.status == CellStatus::BruteForceExact && c.certified_bound) {
                EXPECT_LE(*c.certified_bound, *c.value);
            }
            if (c.discrepancy) {
                EXPECT_EQ(c.reason.find("unexplained"), std::string::npos) << row.name;
            }
        }
}

TEST(Tables, NothingComputedWhenAllCapsZero) {
    const auto r = build_tables(caps_of({}), SearchOptions{});
    EXPECT_FALSE(r.table1.empty());
    for (const auto& row : r.table2)
        for (const auto& c : row.cells) {
            EXPECT_EQ(c.status, CellStatus::NotComputed);
            EXPECT_FALSE(c.discrepancy);
        }
    EXPECT_NE(render_text(r).find("S_4"), std::string::npos);
}

TEST(Tables, BudgetMarksCells) {
    SearchOptions tiny;
    tiny.max_pairs = 5;
    const auto r = build_tables(caps_of({"hypercube=4"}), tiny);
    EXPECT_EQ(cell(r, "Q_4", DiagnosisModel::Pmc, Strategy::Precise).status, CellStatus::TheoremCertified);
    EXPECT_EQ(cell(r, "Q_4", DiagnosisModel::Pmc, Strategy::Precise).value, 4u);
    EXPECT_EQ(cell(r, "Q_4", DiagnosisModel::Pmc, Strategy::Pessimistic).status, CellStatus::NotComputedBudget);
    const auto j = to_json(r);
    EXPECT_EQ(j["table2"][0]["name"], "Q_3");
    EXPECT_TRUE(j["table2"][0]["cells"][0].contains("status"));
}
