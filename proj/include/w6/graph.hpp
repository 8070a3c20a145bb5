#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace w6 {

/// Unordered pair of distinct vertices, normalized so u < v.
struct Edge {
    int u = 0;
    int v = 1;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("edge endpoints must differ");
    }

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction: edit operations (delete_edge, contract_edge,
/// add_edge, ...) are free functions returning new graphs, so enumeration
/// branches never alias. Neighbor lists are kept sorted; a per-vertex bitmask
/// mirror is maintained for the search algorithms (which require n <= 64).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }

    /// Bitmask of neighbors; only valid for graphs with order() <= 64.
    std::uint64_t neighbor_mask(int v) const { return mask_[check(v)]; }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
        return v;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> mask_;
};

/// Nondecreasing degree sequence d_1 <= ... <= d_n.
using DegreeSequence = std::vector<int>;

DegreeSequence degree_sequence(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// g minus the edge e. Throws if e is not present ("no such edge").
Graph delete_edge(const Graph& g, Edge e);

/// g plus the edge uv. Throws if uv is already present or u == v.
Graph add_edge(const Graph& g, int u, int v);

/// Contract the edge e = (u,v), suppressing parallel edges and loops.
///
/// Relabeling rule (fixed so certificates referencing vertex indices are
/// reproducible): the merged vertex takes index min(u,v); vertices between
/// min(u,v) and max(u,v) keep their index; vertices above max(u,v) shift
/// down by one. Throws if e is not present.
Graph contract_edge(const Graph& g, Edge e);

/// g minus vertex v (remaining vertices shift down to stay contiguous).
Graph delete_vertex(const Graph& g, int v);

/// Subgraph induced by the vertices set in `keep`, relabeled in increasing
/// order of original index.
Graph induced_subgraph(const Graph& g, std::uint64_t keep);

/// Relabel: vertex v becomes labeling[v].
Graph relabel(const Graph& g, std::span<const int> labeling);

/// Graph on the same vertices whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g, int k);

/// graph6 parse failure; `offset` is the byte position within the input line.
struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what), offset(off) {}
};

/// Parse one graph6 line (an optional ">>graph6<<" header is tolerated and
/// stripped). Throws Graph6Error with a byte offset on malformed input.
Graph parse_graph6(std::string_view text);

/// Emit the standard graph6 encoding (bit-exact: order byte 63+n for n <= 62,
/// "~"-prefixed 18-bit form above that, upper-triangle column-major bits in
/// 6-bit chunks offset by 63).
std::string emit_graph6(const Graph& g);

/// GraphViz output, one `graph "name" { ... }` block.
std::string emit_dot(const Graph& g, std::string_view name = "G");

} // namespace w6
