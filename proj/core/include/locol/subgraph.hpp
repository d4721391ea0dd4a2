#pragma once

#include "locol/graph.hpp"

namespace locol {

inline constexpr int kMaxPatternOrder = 64;

// True iff `host` contains a (not necessarily induced) subgraph isomorphic
// to `pattern`. Backtracking search; patterns above kMaxPatternOrder
// vertices throw SizeLimitError.
bool subgraph_isomorphic(const Graph& pattern, const Graph& host);

}  // namespace locol
