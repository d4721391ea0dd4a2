#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "locol/graph.hpp"

namespace locol {

enum class BoundTag {
    kEndpointCorollary,   // a vertex adjacent to k endpoints forces k+1 colors
    kTwinClass,           // twins need pairwise distinct colors
    kJoinComponentMax,    // max over components H_t of chi_L(H_t + K1)
    kTrivialOrder,        // chi_L >= 2 for n >= 2
    kConstructionLemma4,  // chi_L(G) + sum_t (chi_L(H_t + K1) - 1)
    kChiLPlusM,           // tree ⊙ empty_m: chi_L(T) + m
    kMPlusOne,            // tree ⊙ empty_m: m + 1
};

std::string_view to_string(BoundTag tag);
std::optional<BoundTag> bound_tag_from_string(std::string_view name);

struct TaggedBound {
    int value = 0;
    BoundTag tag = BoundTag::kTrivialOrder;

    friend bool operator==(const TaggedBound&, const TaggedBound&) = default;
};

enum class BoundSide { kLower, kUpper };

struct BoundEvidence {
    BoundSide side;
    TaggedBound bound;

    friend bool operator==(const BoundEvidence&, const BoundEvidence&) = default;
};

// Lower and upper bounds on chi_L with the rule that produced each. When
// `indeterminate` is set, an exact sub-solve ran out of budget and the
// bounds are the weakest values still justified (lower may equal the
// trivial bound, upper may equal the order).
struct BoundsReport {
    TaggedBound lower;
    TaggedBound upper;
    std::vector<BoundEvidence> evidence;  // every bound considered, in computation order
    bool indeterminate = false;
};

// Classes of vertices u, v with d(u,w) = d(v,w) for every w outside {u, v}.
// Ordered by smallest member. Requires a connected graph (DomainError).
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

// max of: 2; (most endpoints adjacent to one vertex) + 1; largest twin
// class, plus one if a vertex outside the class is adjacent to all of it.
// Ties keep the earlier rule in that list.
TaggedBound locating_lower_bound(const Graph& g);

}  // namespace locol
