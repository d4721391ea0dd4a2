#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "locol/corona.hpp"
#include "locol/distance.hpp"
#include "locol/error.hpp"
#include "locol/graph.hpp"
#include "locol/graph_io.hpp"
#include "locol/subgraph.hpp"
#include "support/generators.hpp"

namespace locol {
namespace {

// Floyd-Warshall, kept separate from the BFS under test.
std::vector<std::vector<int>> reference_distances(const Graph& g) {
    const int n = g.order();
    constexpr int kFar = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x == kFar) x = DistanceMatrix::kUnreachable;
    return d;
}

bool isomorphic_brute_force(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) ok = ok && b.has_edge(perm[u], perm[v]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Tries every injective map of pattern vertices into the host.
bool subgraph_brute_force(const Graph& pattern, const Graph& host) {
    const int p = pattern.order();
    const int h = host.order();
    std::vector<int> image(p, 0);
    std::function<bool(int, std::vector<char>&)> place = [&](int i, std::vector<char>& used) {
        if (i == p) {
            for (auto [u, v] : pattern.edges())
                if (!host.has_edge(image[u], image[v])) return false;
            return true;
        }
        for (int x = 0; x < h; ++x) {
            if (used[x]) continue;
            used[x] = 1;
            image[i] = x;
            if (place(i + 1, used)) return true;
            used[x] = 0;
        }
        return false;
    };
    std::vector<char> used(h, 0);
    return place(0, used);
}

TEST(MakeGraph, SmallestPath) {
    const Graph g = make_graph(2, {{0, 1}});
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(MakeGraph, CollapsesDuplicatesAndNormalizes) {
    const Graph g = make_graph(3, {{1, 0}, {0, 1}, {2, 1}});
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
    EXPECT_EQ(g, path_graph(3));
}

TEST(MakeGraph, RejectsLoopsAndRange) {
    EXPECT_THROW(make_graph(4, {{0, 0}}), InvalidInput);
    EXPECT_THROW(make_graph(2, {{0, 2}}), InvalidInput);
    EXPECT_THROW(make_graph(2, {{-1, 1}}), InvalidInput);
}

TEST(Generate, Families) {
    const Graph s5 = star_graph(5);
    EXPECT_EQ(s5.order(), 5);
    EXPECT_EQ(s5.size(), 4u);
    EXPECT_EQ(s5.degree(0), 4);

    const Graph e3 = empty_graph(3);
    EXPECT_EQ(e3.size(), 0u);
    EXPECT_EQ(connected_components(e3).size(), 3u);

    const Graph c4 = cycle_graph(4);
    EXPECT_EQ(c4.size(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2);

    const Graph ds = double_star_graph(2, 3);
    EXPECT_EQ(ds.order(), 7);
    EXPECT_TRUE(ds.has_edge(0, 1));
    EXPECT_EQ(ds.degree(0), 3);
    EXPECT_EQ(ds.degree(1), 4);

    EXPECT_EQ(complete_graph(5).size(), 10u);
}

TEST(Generate, MinimumOrders) {
    EXPECT_THROW(cycle_graph(2), InvalidInput);
    EXPECT_THROW(star_graph(1), InvalidInput);
    EXPECT_THROW(double_star_graph(0, 2), InvalidInput);
    EXPECT_THROW(path_graph(0), InvalidInput);
    EXPECT_NO_THROW(empty_graph(0));
}

TEST(DisjointUnion, PathAndCycle) {
    const Graph h = disjoint_union(path_graph(2), cycle_graph(4));
    EXPECT_EQ(h.order(), 6);
    EXPECT_EQ(h.size(), 5u);
    EXPECT_EQ(connected_components(h).size(), 2u);
    EXPECT_EQ(disjoint_union(cycle_graph(5), empty_graph(0)), cycle_graph(5));
    EXPECT_EQ(disjoint_union(empty_graph(2), empty_graph(3)), empty_graph(5));
}

TEST(JoinWithK1, KnownShapes) {
    EXPECT_TRUE(isomorphic_brute_force(join_with_k1(path_graph(2)), cycle_graph(3)));
    const Graph wheel = join_with_k1(cycle_graph(4));
    EXPECT_EQ(wheel.order(), 5);
    EXPECT_EQ(wheel.size(), 8u);
    EXPECT_EQ(wheel.degree(4), 4);
    EXPECT_EQ(join_with_k1(path_graph(1)), path_graph(2));
}

TEST(Corona, Counts) {
    const auto p = corona(path_graph(2), path_graph(2));
    EXPECT_EQ(p.graph.order(), 6);
    EXPECT_EQ(p.graph.size(), 7u);
    const auto t = corona(path_graph(3), disjoint_union(path_graph(2), cycle_graph(4)));
    EXPECT_EQ(t.graph.order(), 21);
}

TEST(Corona, PendantEdgeIsP4) {
    const auto p = corona(path_graph(2), empty_graph(1));
    EXPECT_EQ(p.graph.order(), 4);
    EXPECT_EQ(p.graph.size(), 3u);
    EXPECT_TRUE(isomorphic_brute_force(p.graph, path_graph(4)));
}

TEST(Corona, EmptyHIsIdentity) {
    const auto p = corona(path_graph(2), empty_graph(0));
    EXPECT_EQ(p.graph, path_graph(2));
    EXPECT_THROW(corona(empty_graph(0), path_graph(2)), InvalidInput);
}

TEST(Corona, MapNumberingFollowsComponentOrder) {
    // H = edges {0,2}, {1,3}: components {0,2} and {1,3} interleave in H's numbering.
    const Graph h = make_graph(4, {{0, 2}, {1, 3}});
    const auto p = corona(path_graph(2), h);
    const auto& map = p.map;
    ASSERT_EQ(map.components().size(), 2u);
    EXPECT_EQ(map.satellite(0, 0), 2);
    EXPECT_EQ(map.satellite(0, 2), 3);
    EXPECT_EQ(map.satellite(0, 1), 4);
    EXPECT_EQ(map.satellite(1, 3), 9);
    int centers = 0;
    for (Vertex x = 0; x < map.product_order(); ++x) {
        if (const auto* s = std::get_if<SatelliteLabel>(&map.label(x))) {
            EXPECT_EQ(map.satellite(s->g, s->h), x);
            EXPECT_EQ(map.component_of(s->h), s->component);
            EXPECT_TRUE(p.graph.has_edge(x, map.center(s->g)));
        } else {
            ++centers;
        }
    }
    EXPECT_EQ(centers, 2);
}

TEST(Corona, RandomCountsAndDistanceLaws) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const int gn = std::uniform_int_distribution<int>(1, 8)(rng);
        const int hn = std::uniform_int_distribution<int>(0, 8)(rng);
        const Graph g = testing::random_connected_graph(gn, rng);
        const Graph h = testing::random_graph(hn, rng);
        const auto p = corona(g, h);
        ASSERT_EQ(p.graph.order(), gn * (1 + hn));
        ASSERT_EQ(p.graph.size(), g.size() + static_cast<std::size_t>(gn) * (h.size() + hn));

        const auto dg = all_pairs_distances(g);
        const auto dp = all_pairs_distances(p.graph);
        for (Vertex x = 0; x < p.map.product_order(); ++x) {
            for (Vertex y = 0; y < p.map.product_order(); ++y) {
                const auto& lx = p.map.label(x);
                const auto& ly = p.map.label(y);
                const bool cx = std::holds_alternative<CenterLabel>(lx);
                const bool cy = std::holds_alternative<CenterLabel>(ly);
                const Vertex gx = cx ? std::get<CenterLabel>(lx).g : std::get<SatelliteLabel>(lx).g;
                const Vertex gy = cy ? std::get<CenterLabel>(ly).g : std::get<SatelliteLabel>(ly).g;
                int expected = dg(gx, gy) + (cx ? 0 : 1) + (cy ? 0 : 1);
                if (!cx && !cy && gx == gy) {
                    ASSERT_LE(dp(x, y), 2);
                    continue;
                }
                ASSERT_EQ(dp(x, y), expected);
            }
        }
        // No edges between different copies.
        for (auto [a, b] : p.graph.edges()) {
            const auto* sa = std::get_if<SatelliteLabel>(&p.map.label(a));
            const auto* sb = std::get_if<SatelliteLabel>(&p.map.label(b));
            if (sa && sb) ASSERT_EQ(sa->g, sb->g);
        }
    }
}

TEST(Distances, Basics) {
    EXPECT_EQ(all_pairs_distances(path_graph(3))(0, 2), 2);
    const auto d = all_pairs_distances(empty_graph(2));
    EXPECT_EQ(d(0, 1), DistanceMatrix::kUnreachable);
    EXPECT_FALSE(d.reachable(1, 0));
}

TEST(Distances, FixtureProductSatellitesAcrossCopies) {
    const auto p = corona(path_graph(3), disjoint_union(path_graph(2), cycle_graph(4)));
    const auto d = all_pairs_distances(p.graph);
    const auto ref = reference_distances(p.graph);
    const Vertex ua = p.map.satellite(0, 0);
    const Vertex wa = p.map.satellite(2, 0);
    EXPECT_EQ(ref[ua][wa], 4);
    EXPECT_EQ(d(ua, wa), 4);
}

TEST(Distances, MatchesFloydWarshallAndMetricLaws) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(std::uniform_int_distribution<int>(1, 12)(rng), rng, 0.25);
        const auto d = all_pairs_distances(g);
        const auto ref = reference_distances(g);
        for (Vertex u = 0; u < g.order(); ++u) {
            ASSERT_EQ(d(u, u), 0);
            for (Vertex v = 0; v < g.order(); ++v) {
                ASSERT_EQ(d(u, v), ref[u][v]);
                ASSERT_EQ(d(u, v), d(v, u));
                ASSERT_EQ(d(u, v) == 1, g.has_edge(u, v));
                for (Vertex w = 0; w < g.order(); ++w) {
                    if (d.reachable(u, w) && d.reachable(w, v)) ASSERT_LE(d(u, v), d(u, w) + d(w, v));
                }
            }
        }
    }
}

TEST(Components, CanonicalOrder) {
    const auto comps = connected_components(disjoint_union(path_graph(2), cycle_graph(4)));
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(comps[1], (std::vector<Vertex>{2, 3, 4, 5}));
    EXPECT_EQ(connected_components(empty_graph(3)).size(), 3u);
    EXPECT_TRUE(is_connected(cycle_graph(4)));
    EXPECT_FALSE(is_connected(empty_graph(2)));

    const Graph interleaved = make_graph(5, {{0, 3}, {1, 4}, {2, 4}});
    const auto c = connected_components(interleaved);
    EXPECT_EQ(c[0], (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(c[1], (std::vector<Vertex>{1, 2, 4}));
    EXPECT_EQ(connected_components(interleaved), c);
}

TEST(Components, JoinIsAlwaysConnected) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        EXPECT_TRUE(is_connected(join_with_k1(testing::random_graph(trial % 9, rng, 0.2))));
    }
}

TEST(SubgraphIsomorphism, Examples) {
    EXPECT_TRUE(subgraph_isomorphic(path_graph(3), path_graph(6)));
    EXPECT_FALSE(subgraph_isomorphic(cycle_graph(3), star_graph(6)));
    EXPECT_FALSE(subgraph_isomorphic(cycle_graph(3), path_graph(7)));
    EXPECT_FALSE(subgraph_isomorphic(star_graph(4), path_graph(6)));
    EXPECT_FALSE(subgraph_brute_force(star_graph(4), path_graph(6)));
    // C4 sits inside K4 only as a non-induced subgraph.
    EXPECT_TRUE(subgraph_isomorphic(cycle_graph(4), complete_graph(4)));
}

TEST(SubgraphIsomorphism, SizeGuard) {
    EXPECT_THROW(subgraph_isomorphic(path_graph(65), path_graph(70)), SizeLimitError);
    EXPECT_NO_THROW(subgraph_isomorphic(path_graph(64), path_graph(64)));
}

TEST(SubgraphIsomorphism, AgreesWithBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph pattern = testing::random_graph(std::uniform_int_distribution<int>(1, 5)(rng), rng, 0.4);
        const Graph host = testing::random_graph(std::uniform_int_distribution<int>(1, 7)(rng), rng, 0.5);
        ASSERT_EQ(subgraph_isomorphic(pattern, host), subgraph_brute_force(pattern, host))
            << serialize_graph(pattern) << "in\n" << serialize_graph(host);
    }
}

TEST(GraphIo, ParseAndSerialize) {
    EXPECT_EQ(parse_graph("n 2\ne 0 1\n"), path_graph(2));
    EXPECT_EQ(serialize_graph(cycle_graph(3)), "n 3\ne 0 1\ne 0 2\ne 1 2\n");
    EXPECT_EQ(parse_graph("# triangle\nn 3\n\ne 2 1\ne 0 2\ne 1 0"), cycle_graph(3));
    EXPECT_EQ(serialize_graph(empty_graph(0)), "n 0\n");
}

TEST(GraphIo, Errors) {
    try {
        parse_graph("n 2\ne 0 5\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
    EXPECT_THROW(parse_graph("n 2\ne 0\n"), ParseError);
    EXPECT_THROW(parse_graph("n 2\nx 0 1\n"), ParseError);
    EXPECT_THROW(parse_graph("n two\n"), ParseError);
    EXPECT_THROW(parse_graph("n 3\ne 1 1\n"), ParseError);
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), std::system_error);
}

TEST(GraphIo, RoundTripProperty) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = testing::random_graph(std::uniform_int_distribution<int>(0, 15)(rng), rng);
        const std::string text = serialize_graph(g);
        ASSERT_EQ(parse_graph(text), g);
        ASSERT_EQ(serialize_graph(parse_graph(text)), text);
    }
}

TEST(TreeCorpus, CountsMatchKnownSequence) {
    const std::vector<std::size_t> expected{0, 0, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 2; n <= 8; ++n) {
        const auto trees = testing::all_trees(n);
        EXPECT_EQ(trees.size(), expected[n]) << "n = " << n;
        for (const auto& t : trees) EXPECT_TRUE(is_tree(t));
    }
}

}  // namespace
}  // namespace locol
