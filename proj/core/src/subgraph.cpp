#include "locol/subgraph.hpp"

#include <algorithm>

#include "locol/error.hpp"

namespace locol {
namespace {

// Pattern order in which every vertex after the first of its component has
// an already-placed neighbor, so edge checks prune as early as possible.
std::vector<Vertex> matching_order(const Graph& p) {
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(p.order()), 0);
    for (const auto& comp : connected_components(p)) {
        Vertex root = *std::max_element(comp.begin(), comp.end(),
                                        [&](Vertex a, Vertex b) { return p.degree(a) < p.degree(b); });
        std::size_t head = order.size();
        order.push_back(root);
        placed[root] = 1;
        while (head < order.size()) {
            Vertex v = order[head++];
            for (Vertex w : p.neighbors(v)) {
                if (!placed[w]) {
                    placed[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& pattern, const Graph& host)
        : pattern_(pattern), host_(host), order_(matching_order(pattern)),
          image_(static_cast<std::size_t>(pattern.order()), -1),
          used_(static_cast<std::size_t>(host.order()), 0) {}

    bool run() { return extend(0); }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex p = order_[depth];
        for (Vertex h = 0; h < host_.order(); ++h) {
            if (used_[h] || host_.degree(h) < pattern_.degree(p)) continue;
            bool fits = true;
            for (Vertex q : pattern_.neighbors(p)) {
                if (image_[q] >= 0 && !host_.has_edge(image_[q], h)) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            image_[p] = h;
            used_[h] = 1;
            if (extend(depth + 1)) return true;
            image_[p] = -1;
            used_[h] = 0;
        }
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
};

}  // namespace

bool subgraph_isomorphic(const Graph& pattern, const Graph& host) {
    if (pattern.order() > kMaxPatternOrder) {
        throw SizeLimitError("subgraph pattern has " + std::to_string(pattern.order()) +
                             " vertices; limit is " + std::to_string(kMaxPatternOrder));
    }
    if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
    return Matcher(pattern, host).run();
}

}  // namespace locol
