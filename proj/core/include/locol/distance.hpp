#pragma once

#include <vector>

#include "locol/graph.hpp"

namespace locol {

// Hop distances between every pair of vertices. Pairs in different
// components hold kUnreachable.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, kUnreachable) {}

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }
    [[nodiscard]] bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kUnreachable; }
    int& at(Vertex u, Vertex v) { return data_[index(u, v)]; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<int> data_;
};

// One BFS per source.
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace locol
