#include "locol/constructions.hpp"

#include <algorithm>
#include <string>

#include "locol/error.hpp"
#include "locol/subgraph.hpp"

namespace locol {
namespace {

ConstructionResult certify(const Graph& g, int k, std::vector<Color> colors, std::string source) {
    Coloring coloring;
    try {
        coloring = Coloring(k, std::move(colors));
    } catch (const InvalidInput& e) {
        throw InternalError(source + " construction is not a valid coloring: " + e.what());
    }
    if (!verify(g, coloring).locating) {
        throw InternalError(source + " construction does not verify as locating");
    }
    return {std::move(coloring), k, true, std::move(source)};
}

void require_connected_order_two(const Graph& g, const char* what) {
    if (g.order() < 2 || !is_connected(g)) {
        throw DomainError(std::string(what) + " needs a connected graph with at least two vertices");
    }
}

std::vector<Graph> component_joins(const Graph& h) {
    std::vector<Graph> joins;
    for (const auto& comp : connected_components(h)) joins.push_back(join_with_k1(induced_subgraph(h, comp)));
    return joins;
}

class BudgetedSolver {
public:
    explicit BudgetedSolver(std::uint64_t budget) : budget_(budget) {}

    ChiResult solve(const Graph& g) {
        ChiResult r = chi_L(g, budget_ > spent_ ? budget_ - spent_ : 0);
        spent_ += r.nodes;
        return r;
    }

private:
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
};

}  // namespace

BoundsReport corona_bounds(const Graph& g, const Graph& h, std::uint64_t budget) {
    require_connected_order_two(g, "corona bounds");
    BudgetedSolver solver(budget);
    BoundsReport report;

    const ChiResult base = solver.solve(g);
    report.indeterminate = !base.resolved;
    int lower = 0;
    int upper = base.upper;
    for (const Graph& join : component_joins(h)) {
        const ChiResult m = solver.solve(join);
        report.indeterminate = report.indeterminate || !m.resolved;
        lower = std::max(lower, m.lower);
        upper += m.upper - 1;
    }
    report.lower = lower > 0 ? TaggedBound{lower, BoundTag::kJoinComponentMax}
                             : TaggedBound{2, BoundTag::kTrivialOrder};
    report.upper = {upper, BoundTag::kConstructionLemma4};
    report.evidence = {{BoundSide::kLower, report.lower}, {BoundSide::kUpper, report.upper}};
    return report;
}

BoundsReport tree_empty_corona_bounds(const Graph& tree, int m, std::uint64_t budget) {
    if (tree.order() < 2 || !is_tree(tree)) throw PreconditionError("expected a tree on at least two vertices");
    if (m < 1) throw PreconditionError("expected m >= 1");
    const ChiResult base = chi_L(tree, budget);
    BoundsReport report;
    report.indeterminate = !base.resolved;
    report.lower = {m + 1, BoundTag::kMPlusOne};
    report.upper = {base.upper + m, BoundTag::kChiLPlusM};
    report.evidence = {{BoundSide::kLower, report.lower}, {BoundSide::kUpper, report.upper}};
    return report;
}

BoundsReport auto_corona_bounds(const Graph& g, const Graph& h, std::uint64_t budget) {
    BoundsReport report = corona_bounds(g, h, budget);
    if (h.order() >= 1 && h.size() == 0 && is_tree(g)) {
        const BoundsReport tree = tree_empty_corona_bounds(g, h.order(), budget);
        report.indeterminate = report.indeterminate || tree.indeterminate;
        report.evidence.insert(report.evidence.end(), tree.evidence.begin(), tree.evidence.end());
        if (tree.lower.value >= report.lower.value) report.lower = tree.lower;
        if (tree.upper.value <= report.upper.value) report.upper = tree.upper;
    }
    return report;
}

Coloring apex_on_top(const Coloring& join_coloring) {
    return swap_color_names(join_coloring, join_coloring.order() - 1, join_coloring.k());
}

ConstructionResult corona_upper_coloring(const Graph& g, const Graph& h, const Coloring& f,
                                         std::span<const Coloring> joins) {
    require_connected_order_two(g, "corona upper coloring");
    if (f.order() != g.order() || !verify(g, f).locating) {
        throw PreconditionError("f must be a locating coloring of G");
    }
    const auto components = connected_components(h);
    if (joins.size() != components.size()) {
        throw PreconditionError("expected one coloring per component of H");
    }
    std::vector<int> offset(components.size());
    int next = f.k();
    for (std::size_t t = 0; t < components.size(); ++t) {
        const Graph join = join_with_k1(induced_subgraph(h, components[t]));
        const Coloring& ct = joins[t];
        if (ct.order() != join.order() || !verify(join, ct).locating) {
            throw PreconditionError("coloring " + std::to_string(t) + " is not a locating coloring of H_t + K1");
        }
        if (ct[join.order() - 1] != ct.k()) {
            throw PreconditionError("coloring " + std::to_string(t) + " must give the apex its top color");
        }
        offset[t] = next;
        next += ct.k() - 1;
    }

    const Corona product = corona(g, h);
    std::vector<Color> colors(static_cast<std::size_t>(product.map.product_order()));
    for (Vertex p = 0; p < product.map.product_order(); ++p) {
        const auto& label = product.map.label(p);
        if (const auto* center = std::get_if<CenterLabel>(&label)) {
            colors[p] = f[center->g];
        } else {
            const auto& sat = std::get<SatelliteLabel>(label);
            const auto& comp = components[sat.component];
            const auto local = static_cast<Vertex>(std::find(comp.begin(), comp.end(), sat.h) - comp.begin());
            colors[p] = joins[sat.component][local] + offset[sat.component];
        }
    }
    return certify(product.graph, next, std::move(colors), "corona-upper");
}

ConstructionResult corona_upper_coloring(const Graph& g, const Graph& h, std::uint64_t budget) {
    require_connected_order_two(g, "corona upper coloring");
    BudgetedSolver solver(budget);
    const ChiResult base = solver.solve(g);
    if (!base.resolved) throw DomainError("budget exhausted while solving G");
    std::vector<Coloring> joins;
    for (const Graph& join : component_joins(h)) {
        const ChiResult m = solver.solve(join);
        if (!m.resolved) throw DomainError("budget exhausted while solving H_t + K1");
        joins.push_back(apex_on_top(*m.certificate));
    }
    return corona_upper_coloring(g, h, *base.certificate, joins);
}

TwoComponentCoronaFixture p3_corona_p2_c4_fixture() {
    TwoComponentCoronaFixture fx;
    enum : Vertex { u, v, w };
    enum : Vertex { a, b, p, q, r, s };
    fx.g = make_graph(3, {{u, v}, {v, w}});
    fx.h = make_graph(6, {{a, b}, {p, q}, {p, s}, {q, r}, {r, s}});
    fx.product = corona(fx.g, fx.h);
    const CoronaMap& map = fx.product.map;

    const char* g_names = "uvw";
    const char* h_names = "abpqrs";
    fx.names.resize(static_cast<std::size_t>(map.product_order()));
    for (Vertex x = 0; x < 3; ++x) {
        fx.names[map.center(x)] = std::string("(") + g_names[x] + ")";
        for (Vertex y = 0; y < 6; ++y) {
            fx.names[map.satellite(x, y)] = std::string("(") + g_names[x] + "," + h_names[y] + ")";
        }
    }

    std::vector<Color> colors(static_cast<std::size_t>(map.product_order()), 0);
    auto paint = [&](Color c, std::initializer_list<std::pair<Vertex, int>> vertices) {
        for (auto [x, y] : vertices) colors[y < 0 ? map.center(x) : map.satellite(x, y)] = c;
    };
    constexpr int kCenter = -1;
    paint(1, {{v, kCenter}, {u, p}, {w, p}});
    paint(2, {{u, q}, {v, q}, {w, r}, {u, a}, {v, a}, {w, a}});
    paint(3, {{w, kCenter}, {u, r}, {v, p}});
    paint(4, {{u, s}, {v, r}, {w, q}, {u, b}, {v, b}, {w, b}});
    paint(5, {{u, kCenter}, {v, s}, {w, s}});
    fx.result = certify(fx.product.graph, 5, std::move(colors), "theorem2");

    fx.expected_codes.resize(static_cast<std::size_t>(map.product_order()));
    auto row = [&](Vertex x, int y, std::vector<int> code) {
        fx.expected_codes[y < 0 ? map.center(x) : map.satellite(x, y)] = std::move(code);
    };
    row(u, kCenter, {1, 1, 1, 1, 0});
    row(v, kCenter, {0, 1, 1, 1, 1});
    row(w, kCenter, {1, 1, 0, 1, 1});
    row(u, a, {2, 0, 2, 1, 1});
    row(v, a, {1, 0, 2, 1, 2});
    row(w, a, {2, 0, 1, 1, 2});
    row(u, b, {2, 1, 2, 0, 1});
    row(v, b, {1, 1, 2, 0, 2});
    row(w, b, {2, 1, 1, 0, 2});
    row(u, p, {0, 1, 2, 1, 1});
    row(v, p, {1, 1, 0, 2, 1});
    row(w, p, {0, 2, 1, 1, 1});
    row(u, q, {1, 0, 1, 2, 1});
    row(v, q, {1, 0, 1, 1, 2});
    row(w, q, {1, 1, 1, 0, 2});
    row(u, r, {2, 1, 0, 1, 1});
    row(v, r, {1, 1, 2, 0, 1});
    row(w, r, {2, 0, 1, 1, 1});
    row(u, s, {1, 2, 1, 0, 1});
    row(v, s, {1, 2, 1, 1, 0});
    row(w, s, {1, 1, 1, 2, 0});
    return fx;
}

ConstructionResult empty_corona_coloring(const Graph& g, int k) {
    require_connected_order_two(g, "empty corona coloring");
    const int n = g.order();
    if (k < 2) throw PreconditionError("empty corona coloring needs k >= 2");
    if (n > k + 1) {
        throw PreconditionError("empty corona coloring needs n <= k + 1, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
    }
    const Corona product = corona(g, empty_graph(k));
    std::vector<Color> colors(static_cast<std::size_t>(product.map.product_order()));
    for (Vertex i = 0; i < n; ++i) {
        colors[product.map.center(i)] = i + 1;
        for (Vertex j = 0; j < k; ++j) colors[product.map.satellite(i, j)] = i == j ? k + 1 : j + 1;
    }
    return certify(product.graph, k + 1, std::move(colors), "empty-corona");
}

int ceil_sqrt(int n) {
    if (n < 0) throw InvalidInput("square root of a negative number");
    int r = 0;
    while (r * r < n) ++r;
    return r;
}

int star_corona_chi_L(int n) {
    if (n < 4) throw PreconditionError("star corona formula needs n >= 4");
    return ceil_sqrt(n) + 1;
}

ConstructionResult star_corona_coloring(int n) {
    const int l = star_corona_chi_L(n);
    const Corona product = corona(star_graph(n), empty_graph(1));
    std::vector<Color> colors(static_cast<std::size_t>(product.map.product_order()));
    colors[0] = 1;      // x
    colors[n] = l;      // y
    for (int i = 1; i <= n - 1; ++i) {
        const int block = (i + l - 2) / (l - 1);  // ceil(i / (l-1))
        const int j = i - (block - 1) * (l - 1);
        colors[i] = block + 1;
        colors[n + i] = l - j > block ? l - j + 1 : l - j;
    }
    return certify(product.graph, l, std::move(colors), "star-corona");
}

PendantClassification pendant_tree_classifier(const Graph& tree, const Graph& g3, std::uint64_t budget) {
    if (tree.order() < 2 || !is_tree(tree)) throw PreconditionError("expected a tree on at least two vertices");
    const ChiResult base = chi_L(tree, budget);
    if (!base.resolved) throw PreconditionError("could not establish chi_L(T) within budget");
    if (base.value != 3) {
        throw PreconditionError("expected chi_L(T) = 3, got " + std::to_string(base.value));
    }
    PendantClassification out;
    out.in_path6 = subgraph_isomorphic(tree, path_graph(6));
    out.in_g3 = subgraph_isomorphic(tree, g3);
    out.value = out.in_path6 || out.in_g3 ? 3 : 4;

    if (2 * tree.order() <= kPendantCrossCheckMaxOrder) {
        const ChiResult exact = chi_L(corona(tree, empty_graph(1)).graph, budget);
        if (exact.resolved) {
            out.exact = exact.value;
            out.cross_check = exact.value == out.value ? CrossCheck::kAgrees : CrossCheck::kDisagrees;
        }
    }
    return out;
}

}  // namespace locol
