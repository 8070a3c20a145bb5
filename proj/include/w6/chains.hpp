#pragma once

#include "w6/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace w6 {

// Vertex split: remove v, add adjacent vertices x and y with x joined to X
// and y joined to Y, where (X, Y) covers N(v), possibly overlapping, and
// |X|, |Y| >= 2. Inverse of contracting the new edge (x, y).
struct SplitSpec {
    int v;
    std::vector<int> x;
    std::vector<int> y;
};

// Apply a split. The result has n + 1 vertices: v is removed (labels above
// v shift down by one), x = n - 1 and y = n are appended. Throws
// std::invalid_argument when (X, Y) is not a cover of N(v) with both sides
// of size >= 2.
Graph apply_split(const Graph& g, const SplitSpec& s);

// All split specs of one vertex: every assignment of N(v) to X-only,
// Y-only, or both, with |X|, |Y| >= 2. Specs are emitted in a fixed order;
// the (X, Y) / (Y, X) swap is not deduplicated here (the graphs it yields
// are equal up to relabeling and collapse under canonical dedup).
std::vector<SplitSpec> split_specs_of_vertex(const Graph& g, int v);

// All splits of g over all vertices and covers, one representative per
// isomorphism class, sorted by canonical form. With require_4conn only
// 4-connected results are kept.
std::vector<Graph> enumerate_splits(const Graph& g, bool require_4conn);

// Subdivide two edges with no shared endpoint and join the two new
// internal vertices. Cubic in, cubic out, n + 2 vertices. Throws
// std::invalid_argument when g is not cubic, an edge is missing, or the
// edges share an endpoint.
Graph add_handle(const Graph& g, Edge e1, Edge e2);

// Closure of {K33, cube} under add_handle, filtered to cyclically
// 4-connected members, deduplicated, up to max_n vertices (max_n <= 14).
std::vector<Graph> generate_cyclically_4conn_cubic(int max_n);

// Vertex per edge of g (in normalized edge order), adjacent when the edges
// share an endpoint.
Graph line_graph(const Graph& g);

// A cubic h with line_graph(h) isomorphic to g, recovered by partitioning
// E(g) into triangles covering every vertex exactly twice; nullopt when g
// is not the line graph of a cubic graph.
std::optional<Graph> root_graph_cubic(const Graph& g);

// n when g is isomorphic to the squared cycle on n vertices, else nullopt.
std::optional<int> is_square_of_cycle(const Graph& g);

// Sequence of 4-connected graphs, each obtained from the previous one by
// contracting the annotated edge: graphs[i+1] = graphs[i] / contracted[i].
struct Chain {
    std::vector<Graph> graphs;
    std::vector<Edge> contracted;
};

// Greedy chain: starting from 4-connected g, repeatedly contract the first
// edge whose contraction stays 4-connected, until the current graph is a
// squared cycle or the line graph of a cyclically 4-connected cubic graph.
// Throws std::logic_error "no 4-connectivity-preserving contraction;
// chain-termination guarantee violated" if stuck early (must never fire).
Chain chain_decompose(const Graph& g);

// Backtracking over 4-connectivity-preserving contraction sequences from g
// until an intermediate is isomorphic to target. Requires 4-connected g
// outside the two terminal families; throws std::invalid_argument
// otherwise.
std::optional<Chain> chain_search(const Graph& g, const Graph& target);

// All isomorphism classes on n vertices with minimum degree >= min_degree,
// sorted by canonical form. Generated by canonical-augmentation census
// (vertex extension with per-level canonical dedup); a min_degree bound is
// applied via the complement census with the mirrored max-degree cap.
std::vector<Graph> enumerate_graphs(int n, int min_degree);

// Exhaustive certification of the catalog at small orders: for each
// 5 <= n <= max_n, the 4-connected W6-minor-free isomorphism classes on n
// vertices must be exactly the catalog entries of order n.
struct TheoremReport {
    struct OrderLine {
        int order;
        int count;
        std::vector<std::string> names;
    };
    int max_n = 0;
    bool ok = false;
    std::vector<OrderLine> orders;
    // graph6 strings of 4-connected W6-minor-free classes missing from the
    // catalog; must stay empty
    std::vector<std::string> counterexamples;
    // catalog names whose graph was not produced by the enumeration
    std::vector<std::string> missing;
    std::string render() const;
};

TheoremReport verify_theorem(int max_n);

} // namespace w6
