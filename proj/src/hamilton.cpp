#include "w6/hamilton.hpp"

#include "w6/canonical.hpp"
#include "w6/constructors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace w6 {

namespace {

// Extend the path 0, ..., cur by ascending neighbors. Prune when some
// unvisited vertex keeps fewer than 2 usable neighbors (it could never be
// passed through), except the two slots still open at the path's ends.
bool extend(const Graph& g, std::vector<int>& path, std::uint64_t visited, int cur) {
    int n = g.order();
    if (static_cast<int>(path.size()) == n)
        return g.has_edge(cur, 0);
    for (int w : g.neighbors(cur)) {
        if (visited >> w & 1) continue;
        std::uint64_t next_visited = visited | std::uint64_t{1} << w;
        bool dead = false;
        for (int u = 0; u < n && !dead; ++u) {
            if (next_visited >> u & 1 || u == w) continue;
            // u still needs two free slots: neighbors that are unvisited,
            // or the fixed endpoint 0, or the current tip w
            int open = 0;
            for (int x : g.neighbors(u))
                if (!(next_visited >> x & 1) || x == 0 || x == w) ++open;
            if (open < 2) dead = true;
        }
        if (dead) continue;
        path.push_back(w);
        if (extend(g, path, next_visited, w)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<HamiltonCycle> find_hamiltonian_cycle(const Graph& g) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    if (min_degree(g) < 2) return std::nullopt;
    std::vector<int> path{0};
    if (extend(g, path, 1, 0)) return path;
    return std::nullopt;
}

bool chvatal_holds(const DegreeSequence& d) {
    if (d.size() < 3) throw std::invalid_argument("degree sequence shorter than 3");
    DegreeSequence s = d;
    std::sort(s.begin(), s.end());
    int n = static_cast<int>(s.size());
    for (int i = 1; 2 * i < n; ++i) {
        bool low = s[static_cast<std::size_t>(i - 1)] >= i + 1;
        bool high = s[static_cast<std::size_t>(n - i - 1)] >= n - i;
        if (!low && !high) return false;
    }
    return true;
}

HamiltonClass classify_hamilton_exception(const Graph& g) {
    if (g.order() != 6) throw std::invalid_argument("classification requires 6 vertices");
    DegreeSequence d = degree_sequence(g);
    std::sort(d.begin(), d.end());
    if (d[0] != 2 || d[1] != 2 || d[2] < 3)
        throw std::invalid_argument("classification requires degrees d1 = d2 = 2, d3 >= 3");
    std::vector<int> low;
    for (int v = 0; v < 6; ++v)
        if (g.degree(v) == 2) low.push_back(v);
    int a = low[0], b = low[1];
    if (!g.has_edge(a, b) && g.neighbors(a) == g.neighbors(b))
        return HamiltonClass::shared_neighbor_exception;
    if (is_isomorphic(g, special("J"))) return HamiltonClass::j_exception;
    return HamiltonClass::hamiltonian;
}

} // namespace w6
