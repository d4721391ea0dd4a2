#include "locol/coloring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "locol/error.hpp"

namespace locol {

Coloring::Coloring(int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
    if (k < 1 && !colors_.empty()) throw InvalidInput("color count must be positive");
    std::vector<char> seen(static_cast<std::size_t>(std::max(k, 0)) + 1, 0);
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        const Color c = colors_[v];
        if (c < 1 || c > k) {
            throw InvalidInput("vertex " + std::to_string(v) + " has color " + std::to_string(c) +
                               " outside 1.." + std::to_string(k));
        }
        seen[c] = 1;
    }
    for (Color c = 1; c <= k; ++c) {
        if (!seen[c]) throw InvalidInput("color " + std::to_string(c) + " is unused");
    }
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k_));
    for (Vertex v = 0; v < order(); ++v) out[colors_[v] - 1].push_back(v);
    return out;
}

ColorCodeMatrix color_codes(const DistanceMatrix& d, const Coloring& c) {
    if (d.order() != c.order()) throw InvalidInput("coloring size does not match graph order");
    const int n = d.order();
    ColorCodeMatrix codes(n, c.k());
    for (Vertex v = 0; v < n; ++v) {
        for (Color i = 1; i <= c.k(); ++i) codes.at(v, i) = std::numeric_limits<int>::max();
        for (Vertex x = 0; x < n; ++x) {
            const int dist = d(v, x);
            if (dist == DistanceMatrix::kUnreachable) throw DomainError("color codes need a connected graph");
            int& entry = codes.at(v, c[x]);
            entry = std::min(entry, dist);
        }
    }
    return codes;
}

ColorCodeMatrix color_codes(const Graph& g, const Coloring& c) {
    if (g.order() != c.order()) throw InvalidInput("coloring size does not match graph order");
    if (!is_connected(g)) throw DomainError("color codes need a connected graph");
    return color_codes(all_pairs_distances(g), c);
}

VerificationReport verify(const Graph& g, const Coloring& c) {
    VerificationReport report;
    if (g.order() != c.order()) throw InvalidInput("coloring size does not match graph order");
    if (!is_connected(g)) throw DomainError("locating colorings are defined for connected graphs only");

    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            report.witness = MonochromaticEdge{u, v, c[u]};
            return report;
        }
    }
    report.proper = true;

    const auto codes = color_codes(g, c);
    std::map<std::vector<int>, Vertex> first_with_code;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto code = codes.code(v);
        auto [it, inserted] = first_with_code.emplace(std::vector<int>(code.begin(), code.end()), v);
        if (!inserted) {
            report.witness = CodeCollision{it->second, v, it->first};
            return report;
        }
    }
    report.locating = true;
    return report;
}

Coloring swap_color_names(const Coloring& c, Vertex vertex, Color target) {
    if (target < 1 || target > c.k()) throw InvalidInput("target color out of range");
    const Color from = c[vertex];
    std::vector<Color> colors = c.colors();
    for (Color& x : colors) {
        if (x == from) {
            x = target;
        } else if (x == target) {
            x = from;
        }
    }
    return Coloring(c.k(), std::move(colors));
}

}  // namespace locol
