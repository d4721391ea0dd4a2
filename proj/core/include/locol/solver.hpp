#pragma once

#include <cstdint>
#include <optional>

#include "locol/coloring.hpp"
#include "locol/graph.hpp"

namespace locol {

// Search-tree nodes (color assignments tried). Hardware independent.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SearchStatus { kFound, kInfeasible, kBudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::kInfeasible;
    std::optional<Coloring> coloring;  // set iff status == kFound
    std::uint64_t nodes = 0;
};

// Exact backtracking search for a locating coloring with exactly k colors.
//
// Vertices are assigned by descending degree (ties by index) and colors are
// tried in ascending order, with color c+1 allowed only once c has been used.
// The first complete coloring found under that order is returned, so the
// result is a deterministic function of (g, k). kInfeasible is a proof of
// non-existence; running out of budget is reported separately.
//
// Pruning: monochromatic edges, equal colors on distance twins, and pairs of
// same-colored vertices whose codes already agree and can no longer be
// separated by any unassigned vertex.
//
// Throws DomainError for a disconnected graph and InvalidInput unless 1 <= k <= n.
SearchResult find_locating_coloring(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

struct ChiResult {
    bool resolved = false;
    int value = 0;                    // chi_L when resolved
    std::optional<Coloring> certificate;
    // When unresolved chi_L lies in [lower, upper]; when resolved both equal value.
    int lower = 0;
    int upper = 0;
    std::uint64_t nodes = 0;
};

// Smallest k admitting a locating coloring. Tries each k from
// locating_lower_bound(g) upward, independently; `budget` is shared across
// all k. Requires a connected graph with at least two vertices.
ChiResult chi_L(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace locol
