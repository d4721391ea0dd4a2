#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locol/bounds.hpp"
#include "locol/coloring.hpp"
#include "locol/corona.hpp"
#include "locol/graph.hpp"
#include "locol/solver.hpp"

namespace locol {

// A coloring built from a closed-form rule and then checked by verify().
// Every builder below throws InternalError instead of returning an
// unverified coloring, so `verified` is true on every returned value.
struct ConstructionResult {
    Coloring coloring;
    int colors_used = 0;
    bool verified = false;
    std::string source;
};

// Sandwich bounds on chi_L(G ⊙ H):
//   lower = max_t chi_L(H_t + K1)                  (join-component-max)
//   upper = chi_L(G) + sum_t (chi_L(H_t + K1) - 1) (construction-lemma4)
// with each chi_L solved exactly. H with no vertices gives lower = 2
// (trivial-order) and upper = chi_L(G). `budget` is shared by all sub-solves;
// if any runs out the report is flagged indeterminate and widened.
BoundsReport corona_bounds(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultBudget);

// For a tree T and m >= 1: m + 1 <= chi_L(T ⊙ empty_m) <= chi_L(T) + m.
// Throws PreconditionError if T is not a tree on at least two vertices or m < 1.
BoundsReport tree_empty_corona_bounds(const Graph& tree, int m, std::uint64_t budget = kDefaultBudget);

// corona_bounds, tightened by tree_empty_corona_bounds when G is a tree and H
// is edgeless with at least one vertex. On equal values the tree rule's tag wins.
BoundsReport auto_corona_bounds(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultBudget);

// Upper-bound construction for G ⊙ H. Centers keep f's colors 1..l. A
// satellite (u, t, v) gets joins[t](v) + l + sum_{j<t} (m_j - 1), where m_j
// is joins[j].k(). Each joins[t] must be a locating coloring of
// join_with_k1(H_t) (H_t induced in canonical component order) whose apex,
// the last vertex, has color m_t; PreconditionError otherwise, and also if
// f is not a locating coloring of G.
ConstructionResult corona_upper_coloring(const Graph& g, const Graph& h, const Coloring& f,
                                         std::span<const Coloring> joins);

// Same construction with optimal f and joins from the exact solver, color
// names permuted so each apex gets the top color. Throws DomainError if a
// sub-solve runs out of budget.
ConstructionResult corona_upper_coloring(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultBudget);

// Renames colors of a coloring of H_t + K1 so the apex (last vertex) has color k.
Coloring apex_on_top(const Coloring& join_coloring);

// P3 ⊙ (P2 ∪ C4) with the explicit 5-coloring, vertex names as in the
// classic presentation: G = {u, v, w}, H = {a, b, p, q, r, s} with edges
// ab, pq, ps, qr, rs.
struct TwoComponentCoronaFixture {
    Graph g;
    Graph h;
    Corona product;
    ConstructionResult result;
    std::vector<std::string> names;               // product vertex -> "(u)", "(u,a)", ...
    std::vector<std::vector<int>> expected_codes; // published code table, row per product vertex
};
TwoComponentCoronaFixture p3_corona_p2_c4_fixture();

// G ⊙ empty_k with k + 1 colors: center u_i gets i, satellite (u_i, v_j) gets
// j when i != j and k + 1 when i == j. Requires G connected, k >= 2 and
// 2 <= n <= k + 1 (PreconditionError otherwise).
ConstructionResult empty_corona_coloring(const Graph& g, int k);

// S_n ⊙ K1 with ceil(sqrt(n)) + 1 colors. Requires n >= 4.
// Vertex layout is that of corona(star_graph(n), empty_graph(1)): x = 0,
// x_i = i, y = n, y_i = n + i.
ConstructionResult star_corona_coloring(int n);

// ceil(sqrt(n)) + 1, for n >= 4.
int star_corona_chi_L(int n);

int ceil_sqrt(int n);

enum class CrossCheck { kNotChecked, kAgrees, kDisagrees };

struct PendantClassification {
    int value = 0;              // 3 or 4
    bool in_path6 = false;
    bool in_g3 = false;
    CrossCheck cross_check = CrossCheck::kNotChecked;
    std::optional<int> exact;   // chi_L(T ⊙ K1) when the product was solved
};

inline constexpr int kPendantCrossCheckMaxOrder = 14;

// chi_L(T ⊙ K1) for a tree with chi_L(T) = 3: 3 if T is a subgraph of P6 or
// of the supplied g3, else 4. When the product has at most
// kPendantCrossCheckMaxOrder vertices it is also solved exactly and the
// answer compared. Throws PreconditionError if T is not a tree or
// chi_L(T) != 3.
PendantClassification pendant_tree_classifier(const Graph& tree, const Graph& g3,
                                              std::uint64_t budget = kDefaultBudget);

}  // namespace locol
