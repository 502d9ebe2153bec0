#pragma once

#include <optional>

#include "diagnet/syndrome.hpp"

namespace diagnet {

/// Smallest node outside F1 ∪ F2 adjacent to F1 Δ F2, if any. Throws DomainError when f1 == f2.
std::optional<NodeId> pmc_witness(const Graph& g, const FaultSet& f1, const FaultSet& f2);

/**
 * Smallest node v outside F1 ∪ F2 with two neighbors in F1 - F2, or two in
 * F2 - F1, or a neighbor in F1 Δ F2 together with a neighbor outside F1 ∪ F2.
 * Throws DomainError when f1 == f2.
 */
std::optional<NodeId> mm_witness(const Graph& g, const FaultSet& f1, const FaultSet& f2);

bool pmc_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2);
bool mm_distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2);

bool distinguishable(const Graph& g, const FaultSet& f1, const FaultSet& f2, DiagnosisModel model);
std::optional<NodeId> distinguishing_node(const Graph& g, const FaultSet& f1, const FaultSet& f2,
                                          DiagnosisModel model);

namespace detail {
// Unchecked variants for the search loops: no universe or distinctness checks.
bool pmc_distinguishable_unchecked(const Graph& g, const FaultSet& f1, const FaultSet& f2);
bool mm_distinguishable_unchecked(const Graph& g, const FaultSet& f1, const FaultSet& f2);
}  // namespace detail

}  // namespace diagnet
