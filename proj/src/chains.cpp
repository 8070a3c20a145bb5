#include "w6/chains.hpp"

#include "w6/canonical.hpp"
#include "w6/connectivity.hpp"
#include "w6/constructors.hpp"
#include "w6/minor.hpp"
#include "w6/parallel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace w6 {

namespace {

std::vector<Graph> map_values(std::map<CanonicalForm, Graph>&& by_form) {
    std::vector<Graph> out;
    out.reserve(by_form.size());
    for (auto& [form, g] : by_form) out.push_back(std::move(g));
    return out;
}

} // namespace

Graph apply_split(const Graph& g, const SplitSpec& s) {
    int n = g.order();
    if (s.v < 0 || s.v >= n) throw std::invalid_argument("split vertex out of range");
    if (s.x.size() < 2 || s.y.size() < 2)
        throw std::invalid_argument("split sides must each have at least 2 vertices");
    std::set<int> xs(s.x.begin(), s.x.end()), ys(s.y.begin(), s.y.end());
    std::set<int> both;
    both.insert(xs.begin(), xs.end());
    both.insert(ys.begin(), ys.end());
    const std::vector<int>& nv = g.neighbors(s.v);
    if (both != std::set<int>(nv.begin(), nv.end()))
        throw std::invalid_argument("split sides must cover the neighborhood exactly");

    // v removed (labels above v shift down), then x = n-1 and y = n appended
    auto shift = [&](int u) { return u > s.v ? u - 1 : u; };
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (e.u == s.v || e.v == s.v) continue;
        es.push_back({shift(e.u), shift(e.v)});
    }
    for (int u : xs) es.push_back({shift(u), n - 1});
    for (int u : ys) es.push_back({shift(u), n});
    es.push_back({n - 1, n});
    return Graph(n + 1, es);
}

std::vector<SplitSpec> split_specs_of_vertex(const Graph& g, int v) {
    const std::vector<int>& nbrs = g.neighbors(v);
    int d = static_cast<int>(nbrs.size());
    std::vector<SplitSpec> out;
    // each neighbor goes to X only, Y only, or both
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        SplitSpec s;
        s.v = v;
        long long c = code;
        for (int i = 0; i < d; ++i) {
            int digit = static_cast<int>(c % 3);
            c /= 3;
            if (digit != 1) s.x.push_back(nbrs[static_cast<std::size_t>(i)]);
            if (digit != 0) s.y.push_back(nbrs[static_cast<std::size_t>(i)]);
        }
        if (s.x.size() >= 2 && s.y.size() >= 2) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Graph> enumerate_splits(const Graph& g, bool require_4conn) {
    std::map<CanonicalForm, Graph> by_form;
    for (int v = 0; v < g.order(); ++v) {
        for (const SplitSpec& s : split_specs_of_vertex(g, v)) {
            Graph h = apply_split(g, s);
            if (require_4conn && !is_k_connected(h, 4)) continue;
            by_form.emplace(canonical_form(h), std::move(h));
        }
    }
    return map_values(std::move(by_form));
}

Graph add_handle(const Graph& g, Edge e1, Edge e2) {
    if (!is_regular(g, 3)) throw std::invalid_argument("handle addition requires a cubic graph");
    if (!g.has_edge(e1.u, e1.v) || !g.has_edge(e2.u, e2.v))
        throw std::invalid_argument("handle edges must exist");
    if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v)
        throw std::invalid_argument("handle edges must not share an endpoint");
    int n = g.order();
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (!(e == e1 || e == e2)) es.push_back(e);
    es.push_back({e1.u, n});
    es.push_back({e1.v, n});
    es.push_back({e2.u, n + 1});
    es.push_back({e2.v, n + 1});
    es.push_back({n, n + 1});
    return Graph(n + 2, es);
}

std::vector<Graph> generate_cyclically_4conn_cubic(int max_n) {
    if (max_n > 14) throw std::invalid_argument("generation capped at 14 vertices");
    std::map<CanonicalForm, Graph> members;
    std::vector<Graph> frontier;
    for (const char* seed : {"k33", "cube"}) {
        const Graph& g = special(seed);
        if (g.order() > max_n) continue;
        members.emplace(canonical_form(g), g);
        frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            if (g.order() + 2 > max_n) continue;
            std::vector<Edge> es = g.edges();
            for (std::size_t i = 0; i < es.size(); ++i) {
                for (std::size_t j = i + 1; j < es.size(); ++j) {
                    const Edge& a = es[i];
                    const Edge& b = es[j];
                    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
                    Graph h = add_handle(g, a, b);
                    if (!is_cyclically_4_connected_cubic(h)) continue;
                    CanonicalForm form = canonical_form(h);
                    if (members.emplace(form, h).second) next.push_back(std::move(h));
                }
            }
        }
        frontier = std::move(next);
    }
    return map_values(std::move(members));
}

Graph line_graph(const Graph& g) {
    std::vector<Edge> ge = g.edges();
    int m = static_cast<int>(ge.size());
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge& a = ge[static_cast<std::size_t>(i)];
            const Edge& b = ge[static_cast<std::size_t>(j)];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) es.push_back({i, j});
        }
    return Graph(m, es);
}

namespace {

// Backtracking Krausz partition: split E(g) into triangles with every
// vertex in exactly two of them, then read the root off the partition.
class RootSearch {
public:
    explicit RootSearch(const Graph& g) : g_(g), edges_(g.edges()) {
        edge_index_.clear();
        for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_[edges_[i]] = static_cast<int>(i);
        used_.assign(edges_.size(), false);
        tri_count_.assign(static_cast<std::size_t>(g.order()), 0);
    }

    std::optional<Graph> run() {
        if (g_.order() == 0 || !is_regular(g_, 4)) return std::nullopt;
        if (g_.edge_count() % 3 != 0) return std::nullopt;
        return search();
    }

private:
    std::optional<Graph> search() {
        std::size_t first = 0;
        while (first < edges_.size() && used_[first]) ++first;
        if (first == edges_.size()) return build_root();
        const Edge e = edges_[first];
        // common neighbors w complete the triangle containing e
        for (int w : g_.neighbors(e.u)) {
            if (w == e.v || !g_.has_edge(e.v, w)) continue;
            int i1 = edge_index_.at(Edge{e.u, w});
            int i2 = edge_index_.at(Edge{e.v, w});
            if (used_[static_cast<std::size_t>(i1)] || used_[static_cast<std::size_t>(i2)]) continue;
            if (tri_count_[static_cast<std::size_t>(e.u)] >= 2 ||
                tri_count_[static_cast<std::size_t>(e.v)] >= 2 ||
                tri_count_[static_cast<std::size_t>(w)] >= 2)
                continue;
            used_[first] = used_[static_cast<std::size_t>(i1)] = used_[static_cast<std::size_t>(i2)] = true;
            ++tri_count_[static_cast<std::size_t>(e.u)];
            ++tri_count_[static_cast<std::size_t>(e.v)];
            ++tri_count_[static_cast<std::size_t>(w)];
            triangles_.push_back({e.u, e.v, w});
            if (auto root = search()) return root;
            triangles_.pop_back();
            --tri_count_[static_cast<std::size_t>(e.u)];
            --tri_count_[static_cast<std::size_t>(e.v)];
            --tri_count_[static_cast<std::size_t>(w)];
            used_[first] = used_[static_cast<std::size_t>(i1)] = used_[static_cast<std::size_t>(i2)] = false;
        }
        return std::nullopt;
    }

    // root vertices = triangles; each g-vertex lies in exactly two
    // triangles and becomes the root edge joining them
    std::optional<Graph> build_root() {
        for (int c : tri_count_)
            if (c != 2) return std::nullopt;
        int t = static_cast<int>(triangles_.size());
        std::vector<std::vector<int>> membership(static_cast<std::size_t>(g_.order()));
        for (int i = 0; i < t; ++i)
            for (int v : triangles_[static_cast<std::size_t>(i)])
                membership[static_cast<std::size_t>(v)].push_back(i);
        std::set<Edge> root_edges;
        for (int v = 0; v < g_.order(); ++v) {
            const std::vector<int>& m = membership[static_cast<std::size_t>(v)];
            Edge re{m[0], m[1]};
            // two root vertices joined by two distinct g-vertices would be
            // a multigraph; not the line graph of a simple cubic graph
            if (!root_edges.insert(re).second) return std::nullopt;
        }
        Graph root(t, std::vector<Edge>(root_edges.begin(), root_edges.end()));
        if (!is_regular(root, 3)) return std::nullopt;
        if (!is_isomorphic(line_graph(root), g_)) return std::nullopt;
        return root;
    }

    const Graph& g_;
    std::vector<Edge> edges_;
    std::map<Edge, int> edge_index_;
    std::vector<bool> used_;
    std::vector<int> tri_count_;
    std::vector<std::array<int, 3>> triangles_;
};

bool is_terminal(const Graph& g) {
    if (is_square_of_cycle(g)) return true;
    if (auto root = root_graph_cubic(g)) return is_cyclically_4_connected_cubic(*root);
    return false;
}

} // namespace

std::optional<Graph> root_graph_cubic(const Graph& g) { return RootSearch(g).run(); }

std::optional<int> is_square_of_cycle(const Graph& g) {
    int n = g.order();
    if (n < 5 || !is_regular(g, 4)) return std::nullopt;
    if (is_isomorphic(g, construct(Family::squared_cycle, n))) return n;
    return std::nullopt;
}

Chain chain_decompose(const Graph& g) {
    if (!is_k_connected(g, 4)) throw std::invalid_argument("chain requires a 4-connected graph");
    Chain chain;
    chain.graphs.push_back(g);
    while (!is_terminal(chain.graphs.back())) {
        const Graph& cur = chain.graphs.back();
        bool advanced = false;
        for (const Edge& e : cur.edges()) {
            Graph h = contract_edge(cur, e);
            if (!is_k_connected(h, 4)) continue;
            chain.contracted.push_back(e);
            chain.graphs.push_back(std::move(h));
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error(
                "no 4-connectivity-preserving contraction; chain-termination guarantee violated");
    }
    return chain;
}

namespace {

bool chain_dfs(const Graph& cur, const Graph& target, const CanonicalForm& target_form,
               Chain& chain, std::set<CanonicalForm>& dead) {
    if (canonical_form(cur) == target_form) return true;
    if (cur.order() <= target.order()) return false;
    for (const Edge& e : cur.edges()) {
        Graph h = contract_edge(cur, e);
        if (!is_k_connected(h, 4)) continue;
        CanonicalForm form = canonical_form(h);
        if (dead.contains(form)) continue;
        chain.contracted.push_back(e);
        chain.graphs.push_back(h);
        if (chain_dfs(chain.graphs.back(), target, target_form, chain, dead)) return true;
        dead.insert(std::move(form));
        chain.graphs.pop_back();
        chain.contracted.pop_back();
    }
    return false;
}

} // namespace

std::optional<Chain> chain_search(const Graph& g, const Graph& target) {
    if (!is_k_connected(g, 4)) throw std::invalid_argument("chain requires a 4-connected graph");
    if (is_terminal(g))
        throw std::invalid_argument("chain search requires a start outside the terminal families");
    Chain chain;
    chain.graphs.push_back(g);
    std::set<CanonicalForm> dead;
    if (chain_dfs(g, target, canonical_form(target), chain, dead)) return chain;
    return std::nullopt;
}

namespace {

// All isomorphism classes on n vertices with maximum degree <= cap, grown
// one vertex at a time with per-level canonical deduplication.
std::vector<Graph> census_max_degree(int n, int cap) {
    std::vector<Graph> level{Graph(1, {})};
    for (int k = 1; k < n; ++k) {
        std::vector<std::map<CanonicalForm, Graph>> parts(level.size());
        parallel_for(static_cast<int>(level.size()), [&](int i) {
            const Graph& g = level[static_cast<std::size_t>(i)];
            for (std::uint64_t join = 0; join < (std::uint64_t{1} << k); ++join) {
                if (std::popcount(join) > cap) continue;
                bool ok = true;
                std::vector<Edge> es = g.edges();
                for (std::uint64_t m = join; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    if (g.degree(v) + 1 > cap) {
                        ok = false;
                        break;
                    }
                    es.push_back({v, k});
                }
                if (!ok) continue;
                Graph h(k + 1, es);
                parts[static_cast<std::size_t>(i)].emplace(canonical_form(h), std::move(h));
            }
        });
        std::map<CanonicalForm, Graph> merged;
        for (auto& p : parts) merged.merge(p);
        level = map_values(std::move(merged));
    }
    return level;
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, int min_degree) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumeration supported for 1 <= n <= 10");
    if (min_degree > n - 1) return {};
    if (min_degree <= 0) return census_max_degree(n, n - 1);
    // complement trick: min degree >= d classes are exactly the
    // complements of max degree <= n-1-d classes, and the cap prunes the
    // census far more than a lower bound could
    std::vector<Graph> capped = census_max_degree(n, n - 1 - min_degree);
    std::map<CanonicalForm, Graph> by_form;
    for (const Graph& g : capped) {
        Graph c = complement(g);
        by_form.emplace(canonical_form(c), std::move(c));
    }
    return map_values(std::move(by_form));
}

TheoremReport verify_theorem(int max_n) {
    if (max_n > 9) throw std::invalid_argument("theorem verification capped at 9 vertices");
    TheoremReport report;
    report.max_n = max_n;
    for (int n = 5; n <= max_n; ++n) {
        std::vector<Graph> classes = enumerate_graphs(n, 4);
        std::vector<char> keep(classes.size(), 0);
        parallel_for(static_cast<int>(classes.size()), [&](int i) {
            const Graph& g = classes[static_cast<std::size_t>(i)];
            keep[static_cast<std::size_t>(i)] =
                is_k_connected(g, 4) && is_w6_minor_free(g) ? 1 : 0;
        });
        std::set<CanonicalForm> found;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (keep[i]) found.insert(canonical_form(classes[i]));

        TheoremReport::OrderLine line;
        line.order = n;
        line.count = static_cast<int>(found.size());
        for (const CatalogEntry& e : catalog()) {
            if (e.order != n) continue;
            if (found.contains(e.canonical))
                line.names.push_back(e.name);
            else
                report.missing.push_back(e.name);
        }
        for (const CanonicalForm& form : found) {
            bool in_catalog = false;
            for (const CatalogEntry& e : catalog())
                if (e.canonical == form) in_catalog = true;
            // the canonical form doubles as the counterexample's graph6
            if (!in_catalog) report.counterexamples.push_back(form);
        }
        report.orders.push_back(std::move(line));
    }
    report.ok = report.counterexamples.empty() && report.missing.empty();
    return report;
}

std::string TheoremReport::render() const {
    std::ostringstream out;
    for (const OrderLine& line : orders) {
        out << "order " << line.order << ": count " << line.count << ":";
        for (const std::string& name : line.names) out << ' ' << name;
        out << '\n';
    }
    if (counterexamples.empty()) {
        out << "counterexamples: none\n";
    } else {
        out << "counterexamples:\n";
        for (const std::string& g6 : counterexamples) out << g6 << '\n';
    }
    if (!missing.empty()) {
        out << "missing:\n";
        for (const std::string& name : missing) out << name << '\n';
    }
    out << "result: " << (ok ? "ok" : "FAIL") << '\n';
    return out.str();
}

} // namespace w6
