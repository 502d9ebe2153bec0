#include "diagnet/syndrome.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

#include "diagnet/errors.hpp"

namespace diagnet {

std::string_view to_string(DiagnosisModel model) { return model == DiagnosisModel::Pmc ? "pmc" : "mm"; }

DiagnosisModel parse_model(std::string_view text) {
    if (text == "pmc" || text == "PMC") return DiagnosisModel::Pmc;
    if (text == "mm" || text == "mmstar" || text == "MM*") return DiagnosisModel::MmStar;
    throw ParameterError(fmt::format("unknown diagnosis model '{}' (expected pmc or mm)", text));
}

std::vector<Test> tests_of(const Graph& g, DiagnosisModel model) {
    std::vector<Test> out;
    if (model == DiagnosisModel::Pmc) {
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            for (NodeId v : g.neighbors(u)) out.push_back({u, v, std::nullopt});
        return out;
    }
    for (NodeId w = 0; w < g.num_nodes(); ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) out.push_back({nb[i], nb[j], w});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Syndrome::Syndrome(DiagnosisModel model, std::vector<Test> tests, std::vector<std::uint8_t> values)
    : model_(model), tests_(std::move(tests)), values_(std::move(values)) {
    if (tests_.size() != values_.size()) throw InputError("syndrome: one value per test is required");
    for (std::size_t i = 0; i < tests_.size(); ++i) {
        const Test& t = tests_[i];
        if ((model_ == DiagnosisModel::Pmc) == t.arbiter.has_value())
            throw InputError(fmt::format("syndrome: test {} does not match model {}", i, to_string(model_)));
        if (t.arbiter && t.u >= t.v) throw InputError("syndrome: comparison tests need u < v");
        if (i > 0 && !(tests_[i - 1] < t)) throw InputError("syndrome: tests must be sorted and distinct");
        if (values_[i] > 1) throw InputError("syndrome: values must be 0 or 1");
    }
}

int Syndrome::value(const Test& test) const {
    auto it = std::lower_bound(tests_.begin(), tests_.end(), test);
    if (it == tests_.end() || *it != test) throw InputError("syndrome: test not in domain");
    return values_[static_cast<std::size_t>(it - tests_.begin())];
}

Syndrome constant_syndrome(const Graph& g, DiagnosisModel model, int value) {
    auto tests = tests_of(g, model);
    std::vector<std::uint8_t> values(tests.size(), static_cast<std::uint8_t>(value != 0));
    return Syndrome(model, std::move(tests), std::move(values));
}

namespace {

// Forced value of a test under fault set f, or -1 when the tester or arbiter is faulty.
int forced_value(const Test& t, const FaultSet& f) {
    if (t.arbiter) {
        if (f.contains(*t.arbiter)) return -1;
        return (f.contains(t.u) || f.contains(t.v)) ? 1 : 0;
    }
    if (f.contains(t.u)) return -1;
    return f.contains(t.v) ? 1 : 0;
}

void require_universe(const Graph& g, const FaultSet& f) {
    if (f.universe_size() != g.num_nodes())
        throw InputError(fmt::format("fault set universe {} does not match graph order {}", f.universe_size(),
                                     g.num_nodes()));
}

}  // namespace

bool is_allowable(const Graph& g, const FaultSet& f, const Syndrome& s) {
    require_universe(g, f);
    if (s.tests() != tests_of(g, s.model())) throw InputError("syndrome domain does not match the graph's tests");
    for (std::size_t i = 0; i < s.size(); ++i) {
        int forced = forced_value(s.tests()[i], f);
        if (forced >= 0 && forced != s.values()[i]) return false;
    }
    return true;
}

Syndrome sample_syndrome(const Graph& g, const FaultSet& f, DiagnosisModel model, std::uint64_t seed) {
    require_universe(g, f);
    std::mt19937_64 rng(seed);
    auto tests = tests_of(g, model);
    std::vector<std::uint8_t> values(tests.size());
    for (std::size_t i = 0; i < tests.size(); ++i) {
        const std::uint64_t draw = rng();
        int forced = forced_value(tests[i], f);
        values[i] = static_cast<std::uint8_t>(forced >= 0 ? forced : static_cast<int>(draw >> 63));
    }
    return Syndrome(model, std::move(tests), std::move(values));
}

bool omega_intersects(const Graph& g, const FaultSet& f1, const FaultSet& f2, DiagnosisModel model) {
    require_universe(g, f1);
    require_universe(g, f2);
    const std::size_t n = g.num_nodes();
    if (model == DiagnosisModel::Pmc) {
        for (NodeId u = 0; u < n; ++u) {
            if (f1.contains(u) || f2.contains(u)) continue;
            for (NodeId v : g.neighbors(u))
                if (f1.contains(v) != f2.contains(v)) return false;
        }
        return true;
    }
    for (NodeId w = 0; w < n; ++w) {
        if (f1.contains(w) || f2.contains(w)) continue;
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                bool a = f1.contains(nb[i]) || f1.contains(nb[j]);
                bool b = f2.contains(nb[i]) || f2.contains(nb[j]);
                if (a != b) return false;
            }
    }
    return true;
}

nlohmann::ordered_json syndrome_to_json(const Syndrome& s) {
    nlohmann::ordered_json out;
    out["model"] = to_string(s.model());
    out["results"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Test& t = s.tests()[i];
        nlohmann::ordered_json test = {t.u, t.v};
        if (t.arbiter) test.push_back(*t.arbiter);
        out["results"].push_back({{"test", test}, {"value", s.values()[i]}});
    }
    return out;
}

Syndrome syndrome_from_json(const nlohmann::json& j) {
    try {
        const auto model = parse_model(j.at("model").get<std::string>());
        std::vector<Test> tests;
        std::vector<std::uint8_t> values;
        for (const auto& r : j.at("results")) {
            const auto& t = r.at("test");
            const std::size_t want = model == DiagnosisModel::Pmc ? 2 : 3;
            if (!t.is_array() || t.size() != want) throw InputError("syndrome: test arity does not match model");
            Test test{t[0].get<NodeId>(), t[1].get<NodeId>(), std::nullopt};
            if (want == 3) test.arbiter = t[2].get<NodeId>();
            tests.push_back(test);
            values.push_back(r.at("value").get<std::uint8_t>());
        }
        return Syndrome(model, std::move(tests), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(fmt::format("malformed syndrome JSON: {}", e.what()));
    } catch (const ParameterError& e) {
        throw InputError(e.what());
    }
}

}  // namespace diagnet
