#include "locol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "locol/error.hpp"

namespace locol {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

Graph make_graph(int n, std::span<const Edge> edges) {
    if (n < 0) throw InvalidInput("negative vertex count");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has an endpoint outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace {

void require_order(bool ok, const char* family, int n) {
    if (!ok) throw InvalidInput(std::string(family) + " order " + std::to_string(n) + " is below the minimum");
}

}  // namespace

Graph path_graph(int n) {
    require_order(n >= 1, "path", n);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

Graph cycle_graph(int n) {
    require_order(n >= 3, "cycle", n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

Graph star_graph(int n) {
    require_order(n >= 2, "star", n);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return make_graph(n, edges);
}

Graph complete_graph(int n) {
    require_order(n >= 1, "complete", n);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, edges);
}

Graph empty_graph(int n) {
    require_order(n >= 0, "empty", n);
    return make_graph(n, std::span<const Edge>{});
}

Graph double_star_graph(int a, int b) {
    if (a < 1 || b < 1) throw InvalidInput("double star needs at least one endpoint on each center");
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) edges.emplace_back(1, next++);
    return make_graph(next, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const int shift = g.order();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
    return make_graph(g.order() + h.order(), edges);
}

Graph join_with_k1(const Graph& h) {
    std::vector<Edge> edges(h.edges().begin(), h.edges().end());
    const int apex = h.order();
    for (int v = 0; v < apex; ++v) edges.emplace_back(v, apex);
    return make_graph(apex + 1, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<Vertex>> components;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        const int id = static_cast<int>(components.size());
        auto& comp = components.emplace_back();
        label[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (label[w] < 0) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
    }
    return make_graph(static_cast<int>(vertices.size()), edges);
}

}  // namespace locol
