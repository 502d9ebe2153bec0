#include "diagnet/diagnosability.hpp"

#include <fmt/format.h>

#include "diagnet/conditions.hpp"
#include "diagnet/errors.hpp"
#include "search_internal.hpp"

namespace diagnet {

std::string_view to_string(Strategy s) { return s == Strategy::Precise ? "precise" : "pessimistic"; }

std::string_view to_string(Method m) {
    switch (m) {
        case Method::BruteForce: return "brute_force";
        case Method::TheoremCertified: return "theorem_certified";
        case Method::Hybrid: return "hybrid";
    }
    return "?";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "precise") return Strategy::Precise;
    if (text == "pessimistic") return Strategy::Pessimistic;
    throw ParameterError(fmt::format("unknown strategy '{}' (expected precise or pessimistic)", text));
}

MethodRequest parse_method(std::string_view text) {
    if (text == "brute") return MethodRequest::Brute;
    if (text == "theorem") return MethodRequest::Theorem;
    if (text == "auto") return MethodRequest::Auto;
    throw ParameterError(fmt::format("unknown method '{}' (expected brute, theorem or auto)", text));
}

namespace {

LevelResult run_level(const Graph& g, std::size_t t, DiagnosisModel model, Strategy strategy,
                      const SearchOptions& options, detail::Budget& budget) {
    const std::size_t n = g.num_nodes();
    if (t > n) throw DomainError(fmt::format("level t = {} outside [0, {}]", t, n));
    const bool trivial = strategy == Strategy::Precise ? t == 0 : (t == 0 || t >= n);
    LevelResult result;
    result.stats.levels_checked = 1;
    if (trivial) return result;
    const unsigned jobs = std::max(1u, options.jobs);
    if (options.algorithm == SearchAlgorithm::Naive)
        result = detail::naive_level(g, model, strategy, t, jobs, budget);
    else if (model == DiagnosisModel::Pmc)
        result = detail::pmc_level(g, strategy, t, jobs, budget);
    else
        result = detail::mm_level(g, strategy, t, jobs, budget);
    result.stats.levels_checked = 1;
    return result;
}

}  // namespace

LevelResult is_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model, Strategy strategy,
                           const SearchOptions& options) {
    detail::Budget budget(options);
    return run_level(g, t, model, strategy, options, budget);
}

LevelResult is_precise_t_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model,
                                     const SearchOptions& options) {
    return is_diagnosable(g, t, model, Strategy::Precise, options);
}

LevelResult is_pessimistic_tt_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model,
                                          const SearchOptions& options) {
    return is_diagnosable(g, t, model, Strategy::Pessimistic, options);
}

DiagnosabilityResult diagnosability(const Graph& g, DiagnosisModel model, Strategy strategy, MethodRequest method,
                                    const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.num_nodes();
    DiagnosabilityResult result;
    result.model = model;
    result.strategy = strategy;
    auto finish = [&]() -> DiagnosabilityResult& {
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    };

    if (method != MethodRequest::Brute && n >= 2)
        result.certified_bound = check_conditions(g).certified_bound(model, strategy);

    if (method == MethodRequest::Theorem) {
        if (!result.certified_bound)
            throw InapplicableError(fmt::format("no theorem certifies {} {} diagnosability of '{}'",
                                                to_string(model), to_string(strategy), g.name()));
        result.t = *result.certified_bound;
        result.method = Method::TheoremCertified;
        result.exact = false;
        return finish();
    }

    // Failing levels are upward closed (precise) or form [m, |V| - 1]
    // (pessimistic), so the first failing level settles the answer.
    const std::size_t top = strategy == Strategy::Precise ? n : (n >= 1 ? n - 1 : 0);
    const bool hybrid = method == MethodRequest::Auto && result.certified_bound;
    const std::size_t first = hybrid ? *result.certified_bound + 1 : 1;
    result.method = hybrid ? Method::Hybrid : Method::BruteForce;

    detail::Budget budget(options);
    for (std::size_t level = first; level <= top; ++level) {
        LevelResult lr = run_level(g, level, model, strategy, options, budget);
        result.stats += lr.stats;
        if (lr.verdict == Verdict::Aborted) {
            if (hybrid) {
                result.t = *result.certified_bound;
                result.method = Method::TheoremCertified;
                result.exact = false;
                return finish();
            }
            throw SearchAborted(fmt::format("search budget exhausted while checking level {} of '{}'", level,
                                            g.name()));
        }
        if (lr.verdict == Verdict::NotDiagnosable) {
            result.t = level - 1;
            result.witness = std::move(lr.witness);
            result.exact = true;
            return finish();
        }
    }
    result.t = std::max(top, first > 0 ? first - 1 : 0);
    result.exact = true;
    return finish();
}

nlohmann::ordered_json witness_to_json(const std::optional<WitnessPair>& w) {
    if (!w) return nullptr;
    nlohmann::ordered_json out;
    out["f1"] = w->f1.to_vector();
    out["f2"] = w->f2.to_vector();
    return out;
}

nlohmann::ordered_json stats_to_json(const SearchStats& s) {
    nlohmann::ordered_json out;
    out["pairs_examined"] = s.pairs_examined;
    out["sets_enumerated"] = s.sets_enumerated;
    out["subtrees_pruned"] = s.subtrees_pruned;
    out["levels_checked"] = s.levels_checked;
    return out;
}

nlohmann::ordered_json to_json(const DiagnosabilityResult& r) {
    nlohmann::ordered_json out;
    out["t"] = r.t;
    out["model"] = to_string(r.model);
    out["strategy"] = to_string(r.strategy);
    out["method"] = to_string(r.method);
    out["exact"] = r.exact;
    out["certified_bound"] = r.certified_bound ? nlohmann::ordered_json(*r.certified_bound) : nlohmann::ordered_json(nullptr);
    out["witness"] = witness_to_json(r.witness);
    out["stats"] = stats_to_json(r.stats);
    out["elapsed_seconds"] = r.elapsed.count();
    return out;
}

}  // namespace diagnet
