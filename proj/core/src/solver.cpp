#include "locol/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "locol/bounds.hpp"
#include "locol/distance.hpp"
#include "locol/error.hpp"

namespace locol {
namespace {

constexpr int kNoClass = std::numeric_limits<int>::max();

class Search {
public:
    Search(const Graph& g, int k, std::uint64_t budget)
        : n_(g.order()), k_(k), budget_(budget), dist_(all_pairs_distances(g)) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;

        const auto twins = twin_classes(g);
        std::vector<int> twin_class(static_cast<std::size_t>(n_));
        for (std::size_t c = 0; c < twins.size(); ++c)
            for (Vertex v : twins[c]) twin_class[v] = static_cast<int>(c);

        earlier_neighbors_.resize(static_cast<std::size_t>(n_));
        earlier_twins_.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            const Vertex v = order_[i];
            for (Vertex w : g.neighbors(v))
                if (pos[w] < i) earlier_neighbors_[i].push_back(w);
            for (Vertex w : twins[twin_class[v]])
                if (pos[w] < i && !g.has_edge(v, w)) earlier_twins_[i].push_back(w);
        }

        color_.assign(static_cast<std::size_t>(n_), 0);
        class_distance_.assign(static_cast<std::size_t>(n_) * k_, kNoClass);
        members_.resize(static_cast<std::size_t>(k_) + 1);
    }

    SearchResult run() {
        SearchResult result;
        const bool found = descend(0, 0);
        result.nodes = nodes_;
        if (found) {
            result.status = SearchStatus::kFound;
            result.coloring = Coloring(k_, color_);
        } else {
            result.status = exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kInfeasible;
        }
        return result;
    }

private:
    bool descend(int depth, int used) {
        if (depth == n_) return true;
        const Vertex v = order_[depth];
        const int limit = std::min(k_, used + 1);
        for (Color c = 1; c <= limit; ++c) {
            if (conflicts(depth, c)) continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            const int now_used = std::max(used, c);
            if (k_ - now_used > n_ - depth - 1) continue;

            const std::size_t mark = trail_.size();
            assign(v, c);
            if (!inseparable_pair_exists(depth)) {
                if (descend(depth + 1, now_used)) return true;
                if (exhausted_) return false;
            }
            unassign(v, c, mark);
        }
        return false;
    }

    [[nodiscard]] bool conflicts(int depth, Color c) const {
        for (Vertex w : earlier_neighbors_[depth])
            if (color_[w] == c) return true;
        for (Vertex w : earlier_twins_[depth])
            if (color_[w] == c) return true;
        return false;
    }

    void assign(Vertex v, Color c) {
        color_[v] = c;
        members_[c].push_back(v);
        for (Vertex x = 0; x < n_; ++x) {
            int& entry = class_distance_[slot(x, c)];
            const int d = dist_(v, x);
            if (d < entry) {
                trail_.emplace_back(slot(x, c), entry);
                entry = d;
            }
        }
    }

    void unassign(Vertex v, Color c, std::size_t mark) {
        while (trail_.size() > mark) {
            auto [index, old] = trail_.back();
            class_distance_[index] = old;
            trail_.pop_back();
        }
        members_[c].pop_back();
        color_[v] = 0;
    }

    // A same-colored pair whose partial codes agree stays inseparable if every
    // unassigned vertex x is either equidistant from both or no closer to
    // either of them than their current farthest class. A partial code entry
    // can only shrink, so such an x cannot change either code.
    [[nodiscard]] bool inseparable_pair_exists(int depth) const {
        for (Color c = 1; c <= k_; ++c) {
            const auto& cls = members_[c];
            for (std::size_t i = 0; i < cls.size(); ++i) {
                for (std::size_t j = i + 1; j < cls.size(); ++j) {
                    if (inseparable(cls[i], cls[j], depth)) return true;
                }
            }
        }
        return false;
    }

    [[nodiscard]] bool inseparable(Vertex a, Vertex b, int depth) const {
        const int* ra = &class_distance_[slot(a, 1)];
        const int* rb = &class_distance_[slot(b, 1)];
        int farthest = 0;
        for (int i = 0; i < k_; ++i) {
            if (ra[i] != rb[i]) return false;
            farthest = std::max(farthest, ra[i]);
        }
        for (int p = depth + 1; p < n_; ++p) {
            const Vertex x = order_[p];
            const int da = dist_(a, x);
            const int db = dist_(b, x);
            if (da != db && std::min(da, db) < farthest) return false;
        }
        return true;
    }

    [[nodiscard]] std::size_t slot(Vertex v, Color c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c - 1);
    }

    int n_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    DistanceMatrix dist_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Vertex>> earlier_neighbors_;  // indexed by depth
    std::vector<std::vector<Vertex>> earlier_twins_;      // indexed by depth, non-adjacent twins only
    std::vector<Color> color_;
    std::vector<int> class_distance_;  // partial code entries, n x k
    std::vector<std::vector<Vertex>> members_;
    std::vector<std::pair<std::size_t, int>> trail_;
};

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DomainError("locating colorings are defined for connected graphs only");
}

}  // namespace

SearchResult find_locating_coloring(const Graph& g, int k, std::uint64_t budget) {
    require_connected(g);
    if (k < 1 || k > g.order()) {
        throw InvalidInput("color count " + std::to_string(k) + " outside 1.." + std::to_string(g.order()));
    }
    SearchResult result = Search(g, k, budget).run();
    if (result.coloring && !verify(g, *result.coloring).locating) {
        throw InternalError("solver produced a coloring that does not verify");
    }
    return result;
}

ChiResult chi_L(const Graph& g, std::uint64_t budget) {
    require_connected(g);
    if (g.order() < 2) throw DomainError("chi_L needs at least two vertices");
    ChiResult out;
    const int n = g.order();
    for (int k = locating_lower_bound(g).value; k <= n; ++k) {
        const std::uint64_t left = budget > out.nodes ? budget - out.nodes : 0;
        SearchResult r = find_locating_coloring(g, k, left);
        out.nodes += r.nodes;
        if (r.status == SearchStatus::kFound) {
            out.resolved = true;
            out.value = out.lower = out.upper = k;
            out.certificate = std::move(r.coloring);
            return out;
        }
        if (r.status == SearchStatus::kBudgetExhausted) {
            out.lower = k;
            out.upper = n;
            return out;
        }
    }
    throw InternalError("no locating coloring found up to the order of the graph");
}

}  // namespace locol
