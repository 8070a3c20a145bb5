#include "w6/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace w6 {

namespace {

std::vector<std::vector<int>> build_adjacency(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (e.v >= n) throw std::out_of_range("edge endpoint exceeds vertex count");
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    return adj;
}

} // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), m_(static_cast<int>(edges.size())), adj_(build_adjacency(n, edges)) {
    mask_.assign(static_cast<std::size_t>(n_), 0);
    if (n_ <= 64) {
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[static_cast<std::size_t>(v)])
                mask_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int w : adj_[static_cast<std::size_t>(u)])
            if (u < w) out.emplace_back(u, w);
    return out;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

int min_degree(const Graph& g) {
    int best = g.order() == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Graph delete_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("no such edge");
    std::vector<Edge> es = g.edges();
    es.erase(std::remove(es.begin(), es.end(), e), es.end());
    return Graph(g.order(), es);
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("cannot add a loop");
    if (g.has_edge(u, v)) throw std::invalid_argument("edge already present");
    std::vector<Edge> es = g.edges();
    es.emplace_back(u, v);
    return Graph(g.order(), es);
}

Graph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("no such edge");
    const int keep = e.u;  // e.u < e.v by normalization
    const int gone = e.v;
    auto newlabel = [&](int w) { return w > gone ? w - 1 : w; };
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        if (f == e) continue;
        int a = f.u == gone ? keep : f.u;
        int b = f.v == gone ? keep : f.v;
        if (a == b) continue;  // loop from a common neighbor pair
        Edge nf(newlabel(a), newlabel(b));
        es.push_back(nf);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(g.order() - 1, es);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex index out of range");
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        if (f.u == v || f.v == v) continue;
        es.emplace_back(f.u > v ? f.u - 1 : f.u, f.v > v ? f.v - 1 : f.v);
    }
    return Graph(g.order() - 1, es);
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    std::vector<int> newlabel(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if (keep >> v & 1) newlabel[static_cast<std::size_t>(v)] = k++;
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        int a = newlabel[static_cast<std::size_t>(f.u)];
        int b = newlabel[static_cast<std::size_t>(f.v)];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    return Graph(k, es);
}

Graph relabel(const Graph& g, std::span<const int> labeling) {
    if (static_cast<int>(labeling.size()) != g.order())
        throw std::invalid_argument("labeling size mismatch");
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& f : g.edges())
        es.emplace_back(labeling[static_cast<std::size_t>(f.u)],
                        labeling[static_cast<std::size_t>(f.v)]);
    return Graph(g.order(), es);
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) es.push_back({u, v});
    return Graph(g.order(), es);
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.order();
}

bool is_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

// --- graph6 ------------------------------------------------------------
//
// Reference: McKay's formats.txt. Order is one byte 63+n for n <= 62,
// otherwise 126 followed by three bytes (18 bits) or 126 126 plus six bytes
// (36 bits). The body packs the upper triangle column by column, x(0,1),
// x(0,2), x(1,2), x(0,3), ..., six bits per byte, most significant first,
// each byte offset by 63. Unused trailing bits must be zero.

namespace {

constexpr char kMin = 63;
constexpr char kMax = 126;

} // namespace

Graph parse_graph6(std::string_view text) {
    std::string_view s = text;
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (s.starts_with(">")) {
        if (!s.starts_with(header))
            throw Graph6Error("bad \">>graph6<<\" header", 0);
        s.remove_prefix(header.size());
        base = header.size();
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw Graph6Error("empty graph6 line", base);

    std::size_t pos = 0;
    auto next = [&]() {
        if (pos >= s.size())
            throw Graph6Error("truncated graph6 data (malformed length)", base + s.size());
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < kMin || c > kMax)
            throw Graph6Error("graph6 byte out of range 63..126", base + pos);
        ++pos;
        return c - kMin;
    };

    long long n = 0;
    int first = next();
    if (first != kMax - kMin) {
        n = first;
    } else {
        int b0 = next();
        if (b0 == kMax - kMin) {
            n = 0;
            for (int i = 0; i < 6; ++i) n = n << 6 | next();
        } else {
            n = b0;
            for (int i = 0; i < 2; ++i) n = n << 6 | next();
        }
    }
    if (n > 100000) throw Graph6Error("graph6 order implausibly large", base);

    const long long bits = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != body_bytes)
        throw Graph6Error("graph6 body has wrong length (malformed length)", base + pos);

    std::vector<Edge> es;
    int cur = 0;
    int left = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (left == 0) {
                cur = next();
                left = 6;
            }
            if (cur & 1 << (left - 1)) es.emplace_back(row, col);
            --left;
        }
    }
    if (left > 0 && (cur & ((1 << left) - 1)) != 0)
        throw Graph6Error("nonzero trailing bits", base + pos - 1);
    return Graph(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kMin + n));
    } else if (n <= 258047) {
        out.push_back(kMax);
        out.push_back(static_cast<char>(kMin + (n >> 12 & 63)));
        out.push_back(static_cast<char>(kMin + (n >> 6 & 63)));
        out.push_back(static_cast<char>(kMin + (n & 63)));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int cur = 0;
    int used = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            cur = cur << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(kMin + cur));
                cur = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>(kMin + (cur << (6 - used))));
    return out;
}

std::string emit_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace w6
