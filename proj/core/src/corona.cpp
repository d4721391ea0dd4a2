#include "locol/corona.hpp"

#include "locol/error.hpp"

namespace locol {

CoronaMap::CoronaMap(int g_order, int h_order, std::vector<std::vector<Vertex>> components)
    : g_order_(g_order), h_order_(h_order), components_(std::move(components)) {
    component_of_.assign(static_cast<std::size_t>(h_order), -1);
    slot_of_.assign(static_cast<std::size_t>(h_order), -1);
    int slot = 0;
    for (int t = 0; t < static_cast<int>(components_.size()); ++t) {
        for (Vertex h : components_[t]) {
            if (h < 0 || h >= h_order || component_of_[h] >= 0) {
                throw InvalidInput("corona components do not partition V(H)");
            }
            component_of_[h] = t;
            slot_of_[h] = slot++;
        }
    }
    if (slot != h_order) throw InvalidInput("corona components do not cover V(H)");

    labels_.reserve(static_cast<std::size_t>(product_order()));
    for (Vertex u = 0; u < g_order; ++u) labels_.emplace_back(CenterLabel{u});
    for (Vertex u = 0; u < g_order; ++u) {
        for (int t = 0; t < static_cast<int>(components_.size()); ++t) {
            for (Vertex h : components_[t]) labels_.emplace_back(SatelliteLabel{u, t, h});
        }
    }
}

Vertex CoronaMap::center(Vertex g) const {
    if (g < 0 || g >= g_order_) throw InvalidInput("center index out of range");
    return g;
}

Vertex CoronaMap::satellite(Vertex g, Vertex h) const {
    if (g < 0 || g >= g_order_ || h < 0 || h >= h_order_) throw InvalidInput("satellite index out of range");
    return g_order_ + g * h_order_ + slot_of_[h];
}

Corona corona(const Graph& g, const Graph& h) {
    if (g.order() < 1) throw InvalidInput("corona needs a non-empty G");
    CoronaMap map(g.order(), h.order(), connected_components(h));

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.reserve(g.size() + static_cast<std::size_t>(g.order()) * (h.size() + h.order()));
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) edges.emplace_back(u, map.satellite(u, v));
        for (auto [a, b] : h.edges()) edges.emplace_back(map.satellite(u, a), map.satellite(u, b));
    }
    return {make_graph(map.product_order(), edges), std::move(map)};
}

}  // namespace locol
