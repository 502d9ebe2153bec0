#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "diagnet/syndrome.hpp"

namespace diagnet {

enum class Strategy { Precise, Pessimistic };

/// How a reported value was obtained.
enum class Method { BruteForce, TheoremCertified, Hybrid };

/// What the caller asks for.
enum class MethodRequest { Brute, Theorem, Auto };

enum class SearchAlgorithm {
    /// Enumerates connected symmetric differences and derives the cheapest common part.
    Decomposition,
    /// Checks every pair of fault sets. Exponential; meant for small graphs and cross-checks.
    Naive,
};

std::string_view to_string(Strategy s);
std::string_view to_string(Method m);
Strategy parse_strategy(std::string_view text);
MethodRequest parse_method(std::string_view text);

struct SearchOptions {
    /// Cap on evaluated candidates (fault-set pairs or decomposition splits).
    std::uint64_t max_pairs = 1'000'000'000;
    std::optional<double> max_seconds;
    unsigned jobs = 1;
    SearchAlgorithm algorithm = SearchAlgorithm::Decomposition;
};

struct SearchStats {
    std::uint64_t pairs_examined = 0;
    std::uint64_t sets_enumerated = 0;
    std::uint64_t subtrees_pruned = 0;
    std::uint64_t levels_checked = 0;

    SearchStats& operator+=(const SearchStats& o);
};

/// Two distinct fault sets that no syndrome can tell apart. f1 precedes f2 lexicographically.
struct WitnessPair {
    FaultSet f1;
    FaultSet f2;
};

enum class Verdict { Diagnosable, NotDiagnosable, Aborted };

struct LevelResult {
    Verdict verdict = Verdict::Diagnosable;
    /// Present exactly when verdict is NotDiagnosable.
    std::optional<WitnessPair> witness;
    SearchStats stats;

    bool diagnosable() const noexcept { return verdict == Verdict::Diagnosable; }
};

/**
 * Every pair of distinct fault sets of size at most t is distinguishable.
 * Throws DomainError unless 0 <= t <= |V|.
 */
LevelResult is_precise_t_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model,
                                     const SearchOptions& options = {});

/**
 * Every pair of fault sets of size at most t whose union exceeds t is distinguishable.
 * Throws DomainError unless 0 <= t <= |V|.
 */
LevelResult is_pessimistic_tt_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model,
                                          const SearchOptions& options = {});

LevelResult is_diagnosable(const Graph& g, std::size_t t, DiagnosisModel model, Strategy strategy,
                           const SearchOptions& options = {});

struct DiagnosabilityResult {
    std::size_t t = 0;
    DiagnosisModel model = DiagnosisModel::Pmc;
    Strategy strategy = Strategy::Precise;
    Method method = Method::BruteForce;
    /// True when t is the exact diagnosability rather than a certified lower bound.
    bool exact = false;
    std::optional<std::size_t> certified_bound;
    /// Indistinguishable pair violating level t + 1.
    std::optional<WitnessPair> witness;
    std::chrono::duration<double> elapsed{};
    SearchStats stats;
};

/**
 * Precise: the largest t with is_precise_t_diagnosable. Pessimistic: the
 * largest t <= |V| - 1 such that every level up to t passes (for |V| >= 2
 * the level |V| holds vacuously and is not reported).
 *
 * Throws InapplicableError for MethodRequest::Theorem when no theorem
 * applies, and SearchAborted when a required search exceeds its budget.
 */
DiagnosabilityResult diagnosability(const Graph& g, DiagnosisModel model, Strategy strategy, MethodRequest method,
                                    const SearchOptions& options = {});

nlohmann::ordered_json witness_to_json(const std::optional<WitnessPair>& w);
nlohmann::ordered_json stats_to_json(const SearchStats& s);
nlohmann::ordered_json to_json(const DiagnosabilityResult& r);

}  // namespace diagnet
