#pragma once

// Test-only graph corpora: every tree up to isomorphism, random connected
// graphs, and random (G, H) corona pairs. Deliberately independent of the
// library apart from make_graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locol/graph.hpp"

namespace locol::testing {

// AHU encoding of the tree rooted at `root`.
inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[root])
        if (w != parent) kids.push_back(rooted_code(adj, w, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

// Canonical string of an unrooted tree: the smallest AHU code over its centers.
inline std::string tree_canonical_form(const Graph& t) {
    const int n = t.order();
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : t.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    if (n <= 2) return std::to_string(n);
    std::vector<int> degree(n);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) leaves.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int leaf : leaves) {
            --remaining;
            for (int w : adj[leaf])
                if (--degree[w] == 1) next.push_back(w);
            degree[leaf] = 0;
        }
        leaves = std::move(next);
    }
    std::string best;
    for (int c : leaves) {
        auto code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// One representative per isomorphism class of trees on n vertices, n >= 2.
// Every tree on n vertices is a tree on n-1 vertices plus a leaf, so
// extending each class representative at every vertex reaches all classes.
inline std::vector<Graph> all_trees(int n) {
    std::vector<Graph> level{make_graph(2, {{0, 1}})};
    for (int order = 3; order <= n; ++order) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const Graph& t : level) {
            for (int v = 0; v < t.order(); ++v) {
                std::vector<Edge> edges(t.edges().begin(), t.edges().end());
                edges.emplace_back(v, order - 1);
                Graph grown = make_graph(order, edges);
                if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
            }
        }
        level = std::move(next);
    }
    return level;
}

// Random spanning tree plus each remaining pair with probability `density`.
inline Graph random_connected_graph(int n, std::mt19937_64& rng, double density = 0.35) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return make_graph(n, edges);
}

// Any graph, possibly disconnected.
inline Graph random_graph(int n, std::mt19937_64& rng, double density = 0.4) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

}  // namespace locol::testing
