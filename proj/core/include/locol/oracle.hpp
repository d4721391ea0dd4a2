#pragma once

#include "locol/graph.hpp"

namespace locol {

inline constexpr int kBruteForceMaxOrder = 8;

// chi_L by enumerating every assignment in {1..k}^n for k = 1, 2, ...
// Shares no code with the solver or verify(): it has its own distance
// computation and code comparison, so it can serve as an oracle for them.
// Throws SizeLimitError above kBruteForceMaxOrder vertices and DomainError
// for disconnected input.
int brute_force_chi_L(const Graph& g);

}  // namespace locol
