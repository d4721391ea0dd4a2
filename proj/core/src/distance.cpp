#include "locol/distance.hpp"

namespace locol {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<Vertex> queue(static_cast<std::size_t>(n));
    for (Vertex s = 0; s < n; ++s) {
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = s;
        d.at(s, s) = 0;
        while (head < tail) {
            const Vertex v = queue[head++];
            const int next = d(s, v) + 1;
            for (Vertex w : g.neighbors(v)) {
                if (d(s, w) == DistanceMatrix::kUnreachable) {
                    d.at(s, w) = next;
                    queue[tail++] = w;
                }
            }
        }
    }
    return d;
}

}  // namespace locol
