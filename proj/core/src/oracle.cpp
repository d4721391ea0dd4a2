#include "locol/oracle.hpp"

#include <algorithm>
#include <vector>

#include "locol/error.hpp"

namespace locol {
namespace {

constexpr int kFar = 1 << 20;

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

bool is_locating(const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<int>& col, int k) {
    const int n = g.order();
    std::vector<char> used(k, 0);
    for (int c : col) used[c] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
    for (auto [u, v] : g.edges()) {
        if (col[u] == col[v]) return false;
    }
    std::vector<std::vector<int>> codes(n, std::vector<int>(k, kFar));
    for (int v = 0; v < n; ++v)
        for (int x = 0; x < n; ++x) codes[v][col[x]] = std::min(codes[v][col[x]], d[v][x]);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (codes[u] == codes[v]) return false;
    return true;
}

}  // namespace

int brute_force_chi_L(const Graph& g) {
    const int n = g.order();
    if (n > kBruteForceMaxOrder) {
        throw SizeLimitError("brute force is limited to " + std::to_string(kBruteForceMaxOrder) + " vertices");
    }
    const auto d = floyd_warshall(g);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d[u][v] >= kFar) throw DomainError("brute force needs a connected graph");

    for (int k = 1; k <= n; ++k) {
        std::vector<int> col(n, 0);
        while (true) {
            if (is_locating(g, d, col, k)) return k;
            int i = 0;
            while (i < n && ++col[i] == k) col[i++] = 0;
            if (i == n) break;
        }
    }
    return n;  // n == 0
}

}  // namespace locol
