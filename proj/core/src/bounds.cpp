#include "locol/bounds.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "locol/distance.hpp"
#include "locol/error.hpp"

namespace locol {
namespace {

constexpr std::array<std::pair<BoundTag, std::string_view>, 7> kTagNames{{
    {BoundTag::kEndpointCorollary, "endpoint-corollary"},
    {BoundTag::kTwinClass, "twin-class"},
    {BoundTag::kJoinComponentMax, "join-component-max"},
    {BoundTag::kTrivialOrder, "trivial-order"},
    {BoundTag::kConstructionLemma4, "construction-lemma4"},
    {BoundTag::kChiLPlusM, "chiL-plus-m"},
    {BoundTag::kMPlusOne, "m-plus-1"},
}};

bool are_twins(const DistanceMatrix& d, Vertex u, Vertex v) {
    for (Vertex w = 0; w < d.order(); ++w) {
        if (w != u && w != v && d(u, w) != d(v, w)) return false;
    }
    return true;
}

}  // namespace

std::string_view to_string(BoundTag tag) {
    for (auto [t, name] : kTagNames) {
        if (t == tag) return name;
    }
    return "unknown";
}

std::optional<BoundTag> bound_tag_from_string(std::string_view name) {
    for (auto [t, n] : kTagNames) {
        if (n == name) return t;
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
    if (!is_connected(g)) throw DomainError("twin classes need a connected graph");
    const auto d = all_pairs_distances(g);
    const int n = g.order();
    // Distance twins form an equivalence relation, so attaching each vertex
    // to the first earlier representative it matches is enough.
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (are_twins(d, classes[c].front(), v)) {
                class_of[v] = static_cast<int>(c);
                classes[c].push_back(v);
                break;
            }
        }
        if (class_of[v] < 0) {
            class_of[v] = static_cast<int>(classes.size());
            classes.push_back({v});
        }
    }
    return classes;
}

TaggedBound locating_lower_bound(const Graph& g) {
    if (g.order() < 2) throw DomainError("locating lower bound needs at least two vertices");
    TaggedBound best{2, BoundTag::kTrivialOrder};

    for (Vertex v = 0; v < g.order(); ++v) {
        int endpoints = 0;
        for (Vertex w : g.neighbors(v)) endpoints += g.degree(w) == 1 ? 1 : 0;
        if (endpoints + 1 > best.value) best = {endpoints + 1, BoundTag::kEndpointCorollary};
    }

    for (const auto& cls : twin_classes(g)) {
        int value = static_cast<int>(cls.size());
        for (Vertex w = 0; w < g.order(); ++w) {
            if (std::find(cls.begin(), cls.end(), w) != cls.end()) continue;
            if (std::all_of(cls.begin(), cls.end(), [&](Vertex x) { return g.has_edge(w, x); })) {
                ++value;
                break;
            }
        }
        if (value > best.value) best = {value, BoundTag::kTwinClass};
    }
    return best;
}

}  // namespace locol
