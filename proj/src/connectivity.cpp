#include "w6/connectivity.hpp"
#include "w6/minor.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace w6 {

namespace {

// Unit-capacity max-flow on the vertex-split network: vertex v becomes
// v_in = 2v and v_out = 2v + 1 with an internal arc of capacity 1; an edge
// uv becomes arcs u_out -> v_in and v_out -> u_in. The s-t vertex
// connectivity for nonadjacent s, t is the max flow from s_out to t_in.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : n_(g.order()) {
        head_.reserve(4 * static_cast<std::size_t>(g.edge_count()) + 2 * static_cast<std::size_t>(n_));
        adj_.assign(static_cast<std::size_t>(2 * n_), {});
        // edge arcs get capacity n so every min cut consists of internal
        // vertex arcs only; the residual cut is then a vertex separator
        for (int v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (const Edge& e : g.edges()) {
            add_arc(out(e.u), in(e.v), n_);
            add_arc(out(e.v), in(e.u), n_);
        }
    }

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    // BFS augmentation from s to t; stops early once flow reaches cap_limit.
    int max_flow(int s, int t, int cap_limit) {
        for (std::size_t i = 0; i < cap_.size(); ++i) cap_[i] = orig_cap_[i];
        int flow = 0;
        while (flow < cap_limit && augment(s, t)) ++flow;
        return flow;
    }

    // After a max_flow run, the set of nodes reachable from s in the
    // residual network.
    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::queue<int> q;
        seen[static_cast<std::size_t>(s)] = true;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a : adj_[static_cast<std::size_t>(x)]) {
                if (cap_[static_cast<std::size_t>(a)] <= 0) continue;
                int y = head_[static_cast<std::size_t>(a)];
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    q.push(y);
                }
            }
        }
        return seen;
    }

private:
    void add_arc(int from, int to, int c) {
        adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(head_.size()));
        head_.push_back(to);
        orig_cap_.push_back(c);
        adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(head_.size()));
        head_.push_back(from);
        orig_cap_.push_back(0);
        cap_.resize(orig_cap_.size());
    }

    bool augment(int s, int t) {
        std::vector<int> via(adj_.size(), -1);
        std::queue<int> q;
        via[static_cast<std::size_t>(s)] = -2;
        q.push(s);
        while (!q.empty() && via[static_cast<std::size_t>(t)] == -1) {
            int x = q.front();
            q.pop();
            for (int a : adj_[static_cast<std::size_t>(x)]) {
                if (cap_[static_cast<std::size_t>(a)] <= 0) continue;
                int y = head_[static_cast<std::size_t>(a)];
                if (via[static_cast<std::size_t>(y)] != -1) continue;
                via[static_cast<std::size_t>(y)] = a;
                q.push(y);
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return false;
        for (int x = t; x != s;) {
            int a = via[static_cast<std::size_t>(x)];
            --cap_[static_cast<std::size_t>(a)];
            ++cap_[static_cast<std::size_t>(a ^ 1)];
            x = head_[static_cast<std::size_t>(a ^ 1)];
        }
        return true;
    }

    int n_;
    std::vector<int> head_;
    std::vector<int> orig_cap_;
    std::vector<int> cap_;
    std::vector<std::vector<int>> adj_;
};

bool is_complete(const Graph& g) {
    int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

// Extract the separator witnessed by a finished s-t max flow: vertices whose
// internal arc crosses the residual cut.
void fill_certificate(const Graph& g, SplitNetwork& net, int s, SeparatorCertificate& cert) {
    std::vector<bool> reach = net.residual_reachable(SplitNetwork::out(s));
    cert.cut.clear();
    cert.side_a.clear();
    cert.side_b.clear();
    for (int v = 0; v < g.order(); ++v) {
        bool in_r = reach[static_cast<std::size_t>(SplitNetwork::in(v))];
        bool out_r = reach[static_cast<std::size_t>(SplitNetwork::out(v))];
        if (in_r && !out_r)
            cert.cut.push_back(v);
        else if (out_r)
            cert.side_a.push_back(v);
        else
            cert.side_b.push_back(v);
    }
}

// Shared driver: returns min over nonadjacent pairs of s-t flow, capped at
// `limit` (so is_k_connected can stop flows early at k). Writes the
// certificate of the best pair when asked for and the cap was not hit.
int connectivity_core(const Graph& g, int limit, SeparatorCertificate* certificate) {
    int n = g.order();
    if (n <= 1) return 0;
    if (!is_connected(g)) {
        if (certificate) {
            certificate->cut.clear();
            certificate->side_a.clear();
            certificate->side_b.clear();
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            std::queue<int> q;
            seen[0] = true;
            q.push(0);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : g.neighbors(x))
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = true;
                        q.push(y);
                    }
            }
            for (int v = 0; v < n; ++v)
                (seen[static_cast<std::size_t>(v)] ? certificate->side_a : certificate->side_b).push_back(v);
        }
        return 0;
    }
    if (is_complete(g)) return std::min(n - 1, limit);

    SplitNetwork net(g);
    int best = std::min(n - 1, limit);
    int best_s = -1, best_t = -1;
    // kappa is realized by some nonadjacent pair: a minimum separator S
    // leaves two sides, and any s, t on opposite sides are nonadjacent with
    // s-t flow |S|.
    for (int s = 0; s < n && best > 0; ++s) {
        for (int t = s + 1; t < n && best > 0; ++t) {
            if (g.has_edge(s, t)) continue;
            int f = net.max_flow(SplitNetwork::out(s), SplitNetwork::in(t), best);
            if (f < best) {
                best = f;
                best_s = s;
                best_t = t;
            }
        }
    }
    if (certificate && best_s >= 0) {
        net.max_flow(SplitNetwork::out(best_s), SplitNetwork::in(best_t), n);
        fill_certificate(g, net, best_s, *certificate);
    }
    return best;
}

} // namespace

int vertex_connectivity(const Graph& g, SeparatorCertificate* certificate) {
    return connectivity_core(g, g.order(), certificate);
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.order() <= k) return false;
    return connectivity_core(g, k, nullptr) >= k;
}

bool is_cyclically_4_connected_cubic(const Graph& g) {
    if (!is_regular(g, 3)) throw std::invalid_argument("graph not cubic");
    int n = g.order();
    std::vector<Edge> es = g.edges();
    int m = static_cast<int>(es.size());

    // A component of g - F contains a cycle iff its edge count reaches its
    // vertex count. Check all edge sets F with |F| <= 3.
    auto violated_by = [&](const std::vector<int>& removed) {
        std::vector<bool> gone(static_cast<std::size_t>(m), false);
        for (int i : removed) gone[static_cast<std::size_t>(i)] = true;
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int i = 0; i < m; ++i) {
            if (gone[static_cast<std::size_t>(i)]) continue;
            adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)].push_back(es[static_cast<std::size_t>(i)].v);
            adj[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)].push_back(es[static_cast<std::size_t>(i)].u);
        }
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (comp[static_cast<std::size_t>(v)] != -1) continue;
            std::queue<int> q;
            comp[static_cast<std::size_t>(v)] = nc;
            q.push(v);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y : adj[static_cast<std::size_t>(x)])
                    if (comp[static_cast<std::size_t>(y)] == -1) {
                        comp[static_cast<std::size_t>(y)] = nc;
                        q.push(y);
                    }
            }
            ++nc;
        }
        std::vector<int> verts(static_cast<std::size_t>(nc), 0), edges_in(static_cast<std::size_t>(nc), 0);
        for (int v = 0; v < n; ++v) ++verts[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
        for (int i = 0; i < m; ++i) {
            if (gone[static_cast<std::size_t>(i)]) continue;
            int c = comp[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].u)];
            if (comp[static_cast<std::size_t>(es[static_cast<std::size_t>(i)].v)] == c)
                ++edges_in[static_cast<std::size_t>(c)];
        }
        int cyclic = 0;
        for (int c = 0; c < nc; ++c)
            if (edges_in[static_cast<std::size_t>(c)] >= verts[static_cast<std::size_t>(c)]) ++cyclic;
        return cyclic >= 2;
    };

    for (int a = 0; a < m; ++a) {
        if (violated_by({a})) return false;
        for (int b = a + 1; b < m; ++b) {
            if (violated_by({a, b})) return false;
            for (int c = b + 1; c < m; ++c)
                if (violated_by({a, b, c})) return false;
        }
    }
    return true;
}

bool is_planar(const Graph& g) {
    int n = g.order();
    if (n >= 3 && g.edge_count() > 3 * n - 6) return false;
    std::vector<Edge> k5e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5e.push_back({i, j});
    std::vector<Edge> k33e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33e.push_back({i, j});
    return !has_minor(g, Graph(5, k5e)) && !has_minor(g, Graph(6, k33e));
}

} // namespace w6
