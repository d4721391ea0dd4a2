#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace locol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// constructor path goes through make_graph, which normalizes edges to u < v
// and keeps them sorted.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

    // Sorted, each edge stored once with first < second.
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    // Sorted neighbor list.
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(int n, std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
};

// Duplicate edges collapse; loops and out-of-range endpoints throw InvalidInput.
Graph make_graph(int n, std::span<const Edge> edges);
inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Standard families. Each throws InvalidInput below its minimum order.
Graph path_graph(int n);              // n >= 1
Graph cycle_graph(int n);             // n >= 3
Graph star_graph(int n);              // n >= 2, vertex 0 is the center
Graph complete_graph(int n);          // n >= 1
Graph empty_graph(int n);             // n >= 0, no edges
Graph double_star_graph(int a, int b);  // a, b >= 1; centers 0 and 1

Graph disjoint_union(const Graph& g, const Graph& h);

// H + K1: the new vertex has index h.order() and is adjacent to every vertex of h.
Graph join_with_k1(const Graph& h);

// Components ordered by their smallest vertex; each component is sorted.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Subgraph induced by `vertices`, relabeled 0..|vertices|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace locol
