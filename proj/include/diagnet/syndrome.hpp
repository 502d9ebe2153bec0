#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagnet/graph.hpp"

namespace diagnet {

enum class DiagnosisModel { Pmc, MmStar };

/// "pmc" or "mm".
std::string_view to_string(DiagnosisModel model);
/// Accepts "pmc", "mm" and "mmstar"; throws ParameterError otherwise.
DiagnosisModel parse_model(std::string_view text);

using FaultSet = NodeSet;

/**
 * A PMC test (u tests v) or an MM* comparison of u and v arbitrated by w.
 * For comparisons u < v. Ordering is by (u, v, w), PMC tests first.
 */
struct Test {
    NodeId u = 0;
    NodeId v = 0;
    std::optional<NodeId> arbiter;

    friend auto operator<=>(const Test&, const Test&) = default;
};

/// PMC: all ordered adjacent pairs. MM*: all (u, v; w) with u < v both adjacent to w. Sorted.
std::vector<Test> tests_of(const Graph& g, DiagnosisModel model);

class Syndrome {
public:
    Syndrome() = default;
    /// Throws InputError when tests are unsorted, repeated, or do not fit the model.
    Syndrome(DiagnosisModel model, std::vector<Test> tests, std::vector<std::uint8_t> values);

    DiagnosisModel model() const noexcept { return model_; }
    const std::vector<Test>& tests() const noexcept { return tests_; }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return tests_.size(); }

    /// Result of a test; throws InputError when the test is not in the domain.
    int value(const Test& test) const;

    friend bool operator==(const Syndrome&, const Syndrome&) = default;

private:
    DiagnosisModel model_ = DiagnosisModel::Pmc;
    std::vector<Test> tests_;
    std::vector<std::uint8_t> values_;
};

/// The syndrome assigning `value` to every test of g.
Syndrome constant_syndrome(const Graph& g, DiagnosisModel model, int value);

/// Throws InputError when the syndrome's tests are not exactly tests_of(g, s.model()).
bool is_allowable(const Graph& g, const FaultSet& f, const Syndrome& s);

/// Forced values for constrained tests, pseudorandom bits for the rest (std::mt19937_64).
Syndrome sample_syndrome(const Graph& g, const FaultSet& f, DiagnosisModel model, std::uint64_t seed);

/// True iff some syndrome is allowable for both f1 and f2, decided test by test.
bool omega_intersects(const Graph& g, const FaultSet& f1, const FaultSet& f2, DiagnosisModel model);

nlohmann::ordered_json syndrome_to_json(const Syndrome& s);
Syndrome syndrome_from_json(const nlohmann::json& j);

}  // namespace diagnet
