#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "locol/distance.hpp"
#include "locol/graph.hpp"

namespace locol {

using Color = int;  // 1-based

// A total, surjective assignment of colors 1..k. Properness is not an
// invariant of the type; verify() reports it.
class Coloring {
public:
    Coloring() = default;
    // Throws InvalidInput if a color lies outside 1..k or some color is unused.
    Coloring(int k, std::vector<Color> colors);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int order() const noexcept { return static_cast<int>(colors_.size()); }
    [[nodiscard]] Color operator[](Vertex v) const { return colors_.at(v); }
    [[nodiscard]] const std::vector<Color>& colors() const noexcept { return colors_; }

    // classes()[i] holds the vertices of color i+1, ascending.
    [[nodiscard]] std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int k_ = 0;
    std::vector<Color> colors_;
};

// Row v is (d(v, C_1), ..., d(v, C_k)).
class ColorCodeMatrix {
public:
    ColorCodeMatrix() = default;
    ColorCodeMatrix(int n, int k) : n_(n), k_(k), data_(static_cast<std::size_t>(n) * k, 0) {}

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::span<const int> code(Vertex v) const {
        return std::span<const int>(data_).subspan(static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_));
    }
    int& at(Vertex v, Color c) { return data_[static_cast<std::size_t>(v) * k_ + (c - 1)]; }

    friend bool operator==(const ColorCodeMatrix&, const ColorCodeMatrix&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<int> data_;
};

// Throws DomainError if g is disconnected, InvalidInput on an order mismatch.
ColorCodeMatrix color_codes(const Graph& g, const Coloring& c);
ColorCodeMatrix color_codes(const DistanceMatrix& d, const Coloring& c);

struct MonochromaticEdge {
    Vertex u;
    Vertex v;
    Color color;

    friend bool operator==(const MonochromaticEdge&, const MonochromaticEdge&) = default;
};

struct CodeCollision {
    Vertex u;
    Vertex v;
    std::vector<int> code;

    friend bool operator==(const CodeCollision&, const CodeCollision&) = default;
};

using Witness = std::variant<MonochromaticEdge, CodeCollision>;

struct VerificationReport {
    bool proper = false;
    bool locating = false;
    // Present whenever locating is false. The edge witness is the first
    // monochromatic edge in edge order; the collision witness has the
    // smallest v among colliding pairs, u being the first vertex with that code.
    std::optional<Witness> witness;
};

VerificationReport verify(const Graph& g, const Coloring& c);

// Renames colors so that `vertex` receives color `target`, swapping with
// whatever color had that name. Codes permute coordinate-wise, so the
// locating property is preserved.
Coloring swap_color_names(const Coloring& c, Vertex vertex, Color target);

}  // namespace locol
