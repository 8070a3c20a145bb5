#pragma once

// Independent reference implementations, used only by tests. Each one is a
// different algorithm from the library's, so agreement is meaningful
// evidence rather than a tautology. All are exponential; keep n small.

#include "w6/canonical.hpp"
#include "w6/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracles {

// Vertex connectivity by exhaustive subset removal: the smallest |S| such
// that g - S is disconnected, or order-1 when no such S exists (complete
// graphs). Requires order <= 16 or so.
inline int brute_connectivity(const w6::Graph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int k = 0; k <= n - 2; ++k) {
        for (std::uint64_t s = 0; s <= all; ++s) {
            if (std::popcount(s) != k || (s & ~all)) continue;
            if (!w6::is_connected(w6::induced_subgraph(g, all & ~s))) return k;
        }
    }
    return n - 1;
}

// Minor containment by the delete/contract recursion: h is a minor of g
// iff g is isomorphic to h, or some single vertex deletion, edge deletion,
// or edge contraction of g still contains h. Memoized on canonical form.
class BruteMinor {
public:
    explicit BruteMinor(const w6::Graph& h) : h_(h) {}

    bool contains(const w6::Graph& g) {
        if (g.order() < h_.order() || g.edge_count() < h_.edge_count()) return false;
        auto key = w6::canonical_form(g);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool found = false;
        if (g.order() == h_.order() && g.edge_count() == h_.edge_count()) {
            found = w6::is_isomorphic(g, h_);
        } else {
            if (g.order() > h_.order())
                for (int v = 0; v < g.order() && !found; ++v)
                    found = contains(w6::delete_vertex(g, v));
            for (const w6::Edge& e : g.edges()) {
                if (found) break;
                if (g.edge_count() > h_.edge_count() && contains(w6::delete_edge(g, e)))
                    found = true;
                else if (g.order() > h_.order() && contains(w6::contract_edge(g, e)))
                    found = true;
            }
        }
        memo_.emplace(std::move(key), found);
        return found;
    }

private:
    w6::Graph h_;
    std::map<w6::CanonicalForm, bool> memo_;
};

inline bool brute_has_minor(const w6::Graph& g, const w6::Graph& h) {
    return BruteMinor(h).contains(g);
}

// Isomorphism classes with minimum degree >= min_deg on n vertices, counted
// by running over every labeled graph (all 2^C(n,2) edge subsets). Only
// feasible for n <= 6.
inline std::vector<w6::Graph> labeled_census(int n, int min_deg) {
    std::vector<w6::Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<w6::CanonicalForm> seen;
    std::vector<w6::Graph> reps;
    for (std::uint64_t bits = 0; bits < (1ull << pairs.size()); ++bits) {
        std::vector<w6::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (bits >> i & 1) edges.push_back(pairs[i]);
        w6::Graph g(n, edges);
        if (w6::min_degree(g) < min_deg) continue;
        if (seen.insert(w6::canonical_form(g)).second) reps.push_back(g);
    }
    return reps;
}

// Hamiltonicity by checking every cyclic vertex order (n <= 8).
inline bool brute_hamiltonian(const w6::Graph& g) {
    int n = g.order();
    if (n < 3) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            ok = g.has_edge(perm[static_cast<std::size_t>(i)],
                            perm[static_cast<std::size_t>((i + 1) % n)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

} // namespace oracles
