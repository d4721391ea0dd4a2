#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locol/graph.hpp"

namespace locol {

struct CenterLabel {
    Vertex g;  // vertex of G

    friend bool operator==(const CenterLabel&, const CenterLabel&) = default;
};

struct SatelliteLabel {
    Vertex g;        // the G vertex this copy of H hangs from
    int component;   // index into CoronaMap::components(), 0-based
    Vertex h;        // vertex of H (original H numbering)

    friend bool operator==(const SatelliteLabel&, const SatelliteLabel&) = default;
};

using CoronaLabel = std::variant<CenterLabel, SatelliteLabel>;

// Provenance of every vertex of G ⊙ H.
//
// Numbering: centers occupy 0..n-1 in G's order. Then one block per G vertex
// (in G's order); inside a block the H vertices are listed component by
// component, in canonical component order, each component in ascending H
// order. Satellite indices are therefore not H's numbering shifted when H
// has interleaved components.
class CoronaMap {
public:
    CoronaMap() = default;
    CoronaMap(int g_order, int h_order, std::vector<std::vector<Vertex>> components);

    [[nodiscard]] int g_order() const noexcept { return g_order_; }
    [[nodiscard]] int h_order() const noexcept { return h_order_; }
    [[nodiscard]] int product_order() const noexcept { return g_order_ * (1 + h_order_); }
    [[nodiscard]] const std::vector<std::vector<Vertex>>& components() const noexcept { return components_; }

    [[nodiscard]] Vertex center(Vertex g) const;
    [[nodiscard]] Vertex satellite(Vertex g, Vertex h) const;
    [[nodiscard]] const CoronaLabel& label(Vertex product_vertex) const { return labels_.at(product_vertex); }
    [[nodiscard]] const std::vector<CoronaLabel>& labels() const noexcept { return labels_; }

    // Component index of an H vertex.
    [[nodiscard]] int component_of(Vertex h) const { return component_of_.at(h); }

    friend bool operator==(const CoronaMap&, const CoronaMap&) = default;

private:
    int g_order_ = 0;
    int h_order_ = 0;
    std::vector<std::vector<Vertex>> components_;
    std::vector<int> component_of_;
    std::vector<int> slot_of_;  // position of an H vertex inside a block
    std::vector<CoronaLabel> labels_;
};

struct Corona {
    Graph graph;
    CoronaMap map;
};

// G ⊙ H. Requires g.order() >= 1.
Corona corona(const Graph& g, const Graph& h);

}  // namespace locol
