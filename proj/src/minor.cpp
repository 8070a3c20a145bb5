#include "w6/minor.hpp"
#include "w6/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace w6 {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Backtracking branch-set search. H-vertices are assigned in descending
// degree order; candidate branch sets are connected subsets of the unused
// g-vertices, enumerated exactly once each (rooted at their minimum element,
// grown by exclusive extension) and smallest-first.
class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
        int nh = h_.order();
        order_.resize(static_cast<std::size_t>(nh));
        for (int i = 0; i < nh; ++i) order_[static_cast<std::size_t>(i)] = i;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (h_.degree(a) != h_.degree(b)) return h_.degree(a) > h_.degree(b);
            return a < b;
        });
        set_mask_.assign(static_cast<std::size_t>(nh), 0);
    }

    bool run() {
        if (h_.order() > g_.order() || h_.edge_count() > g_.edge_count()) return false;
        if (h_.order() == 0) return true;
        avail_ = g_.order() == 64 ? ~std::uint64_t{0} : bit(g_.order()) - 1;
        return place(0);
    }

    // Branch sets indexed by h-vertex; valid only after run() returned true.
    std::vector<std::vector<int>> branch_sets() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(h_.order()));
        for (int p = 0; p < h_.order(); ++p) {
            std::vector<int>& s = out[static_cast<std::size_t>(order_[static_cast<std::size_t>(p)])];
            for (std::uint64_t m = set_mask_[static_cast<std::size_t>(p)]; m; m &= m - 1)
                s.push_back(std::countr_zero(m));
        }
        return out;
    }

private:
    bool place(int pos) {
        if (pos == h_.order()) return true;
        int hv = order_[static_cast<std::size_t>(pos)];
        placed_adj_.clear();
        future_need_ = 0;
        for (int p = 0; p < h_.order(); ++p) {
            if (p == pos || !h_.has_edge(order_[static_cast<std::size_t>(p)], hv)) continue;
            if (p < pos)
                placed_adj_.push_back(set_mask_[static_cast<std::size_t>(p)]);
            else
                ++future_need_;
        }
        // each later branch set needs at least one vertex
        int slack = std::popcount(avail_) - (h_.order() - pos);
        if (slack < 0) return false;
        max_size_ = slack + 1;
        for (std::uint64_t roots = avail_; roots; roots &= roots - 1) {
            int r = std::countr_zero(roots);
            // grown sets keep r as minimum element, so each connected subset
            // of avail_ is produced from exactly one root
            std::uint64_t allowed = roots & (roots - 1);
            std::uint64_t s = bit(r);
            std::uint64_t closed = s | g_.neighbor_mask(r);
            if (grow(pos, s, g_.neighbor_mask(r) & allowed, closed, allowed)) return true;
        }
        return false;
    }

    // S with closed neighborhood `closed`; ext holds unexplored extension
    // candidates within `allowed` (available vertices above S's root).
    // Tries S itself, then each extension exactly once.
    bool grow(int pos, std::uint64_t s, std::uint64_t ext, std::uint64_t closed,
              std::uint64_t allowed) {
        if (accept(pos, s, closed)) return true;
        if (std::popcount(s) >= max_size_) return false;
        while (ext) {
            int w = std::countr_zero(ext);
            ext &= ext - 1;
            std::uint64_t fresh = g_.neighbor_mask(w) & allowed & ~closed;
            if (grow(pos, s | bit(w), ext | fresh, closed | bit(w) | g_.neighbor_mask(w), allowed))
                return true;
        }
        return false;
    }

    bool accept(int pos, std::uint64_t s, std::uint64_t closed) {
        std::uint64_t nbrs = closed & ~s;
        for (std::uint64_t req : placed_adj_)
            if (!(nbrs & req)) return false;
        if (std::popcount(nbrs & avail_ & ~s) < future_need_) return false;
        // placed_adj_ and future_need_ belong to this pos; place() of the
        // next level overwrites them, so save and restore around recursion
        std::vector<std::uint64_t> saved_adj = std::move(placed_adj_);
        int saved_need = future_need_;
        int saved_max = max_size_;
        set_mask_[static_cast<std::size_t>(pos)] = s;
        avail_ &= ~s;
        bool ok = place(pos + 1);
        avail_ |= s;
        placed_adj_ = std::move(saved_adj);
        future_need_ = saved_need;
        max_size_ = saved_max;
        return ok;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<int> order_;
    std::vector<std::uint64_t> set_mask_;
    std::vector<std::uint64_t> placed_adj_;
    std::uint64_t avail_ = 0;
    int future_need_ = 0;
    int max_size_ = 0;
};

bool connected_in(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return false;
    std::vector<bool> member(static_cast<std::size_t>(g.order()), false);
    for (int v : verts) member[static_cast<std::size_t>(v)] = true;
    std::vector<int> stack{verts[0]};
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    seen[static_cast<std::size_t>(verts[0])] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x)) {
            if (!member[static_cast<std::size_t>(y)] || seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = true;
            ++reached;
            stack.push_back(y);
        }
    }
    return reached == verts.size();
}

// Backtracking subdivision embedding: h-vertices pinned to distinct
// g-vertices of sufficient degree, h-edges realized as internally disjoint
// paths, explored one edge at a time.
class TopoSearch {
public:
    TopoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), edges_(h.edges()) {
        int nh = h_.order();
        order_.resize(static_cast<std::size_t>(nh));
        for (int i = 0; i < nh; ++i) order_[static_cast<std::size_t>(i)] = i;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (h_.degree(a) != h_.degree(b)) return h_.degree(a) > h_.degree(b);
            return a < b;
        });
        phi_.assign(static_cast<std::size_t>(nh), -1);
        taken_.assign(static_cast<std::size_t>(g_.order()), false);
    }

    bool run() {
        if (h_.order() > g_.order() || h_.edge_count() > g_.edge_count()) return false;
        if (h_.order() == 0) return true;
        return assign(0);
    }

private:
    bool assign(std::size_t k) {
        if (k == order_.size()) {
            used_ = taken_;
            return connect(0);
        }
        int hv = order_[k];
        for (int gv = 0; gv < g_.order(); ++gv) {
            if (taken_[static_cast<std::size_t>(gv)] || g_.degree(gv) < h_.degree(hv)) continue;
            taken_[static_cast<std::size_t>(gv)] = true;
            phi_[static_cast<std::size_t>(hv)] = gv;
            if (assign(k + 1)) return true;
            taken_[static_cast<std::size_t>(gv)] = false;
            phi_[static_cast<std::size_t>(hv)] = -1;
        }
        return false;
    }

    bool connect(std::size_t e) {
        if (e == edges_.size()) return true;
        int s = phi_[static_cast<std::size_t>(edges_[e].u)];
        int t = phi_[static_cast<std::size_t>(edges_[e].v)];
        return path_dfs(e, s, t);
    }

    // extend a path from x toward t; internal vertices must be unused
    bool path_dfs(std::size_t e, int x, int t) {
        for (int y : g_.neighbors(x)) {
            if (y == t) {
                if (connect(e + 1)) return true;
                continue;
            }
            if (used_[static_cast<std::size_t>(y)]) continue;
            used_[static_cast<std::size_t>(y)] = true;
            if (path_dfs(e, y, t)) return true;
            used_[static_cast<std::size_t>(y)] = false;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Edge> edges_;
    std::vector<int> order_;
    std::vector<int> phi_;
    std::vector<bool> taken_;
    std::vector<bool> used_;
};

void require_small(const Graph& g) {
    if (g.order() > 64) throw std::invalid_argument("graph too large for minor search");
}

} // namespace

bool has_minor(const Graph& g, const Graph& h) {
    require_small(g);
    require_small(h);
    return MinorSearch(g, h).run();
}

std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h) {
    require_small(g);
    require_small(h);
    MinorSearch search(g, h);
    if (!search.run()) return std::nullopt;
    MinorModel model;
    model.branch_sets = search.branch_sets();
    for (const Edge& he : h.edges()) {
        const std::vector<int>& a = model.branch_sets[static_cast<std::size_t>(he.u)];
        const std::vector<int>& b = model.branch_sets[static_cast<std::size_t>(he.v)];
        bool found = false;
        for (int u : a) {
            for (int v : b) {
                if (g.has_edge(u, v)) {
                    model.edge_witnesses.emplace_back(he, Edge{u, v});
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
    }
    return model;
}

bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model,
                        std::string* violated_clause) {
    auto fail = [&](const char* clause) {
        if (violated_clause) *violated_clause = clause;
        return false;
    };
    if (model.branch_sets.size() != static_cast<std::size_t>(h.order())) return fail("coverage");
    for (const auto& s : model.branch_sets)
        if (s.empty()) return fail("coverage");
    for (const auto& s : model.branch_sets)
        for (int v : s)
            if (v < 0 || v >= g.order()) return fail("range");
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < model.branch_sets.size(); ++i)
        for (int v : model.branch_sets[i]) {
            if (owner[static_cast<std::size_t>(v)] != -1) return fail("disjointness");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (const auto& s : model.branch_sets)
        if (!connected_in(g, s)) return fail("connectivity");
    std::vector<bool> witnessed(static_cast<std::size_t>(h.edge_count()), false);
    std::vector<Edge> hedges = h.edges();
    for (const auto& [he, ge] : model.edge_witnesses) {
        auto it = std::find(hedges.begin(), hedges.end(), he);
        if (it == hedges.end()) return fail("adjacency");
        if (ge.u < 0 || ge.v >= g.order() || !g.has_edge(ge.u, ge.v)) return fail("adjacency");
        int ou = owner[static_cast<std::size_t>(ge.u)];
        int ov = owner[static_cast<std::size_t>(ge.v)];
        if (ou < 0 || ov < 0) return fail("adjacency");
        if (!((ou == it->u && ov == it->v) || (ou == it->v && ov == it->u))) return fail("adjacency");
        witnessed[static_cast<std::size_t>(it - hedges.begin())] = true;
    }
    for (bool w : witnessed)
        if (!w) return fail("adjacency");
    return true;
}

bool has_topological_minor(const Graph& g, const Graph& h) {
    return TopoSearch(g, h).run();
}

Graph wheel_w6() {
    std::vector<Edge> es;
    for (int i = 0; i < 6; ++i) {
        es.push_back({i, (i + 1) % 6});
        es.push_back({i, 6});
    }
    return Graph(7, es);
}

bool is_w6_minor_free(const Graph& g) {
    static const Graph w6 = wheel_w6();
    return !has_minor(g, w6);
}

bool w6_free_7vertex(const Graph& g) {
    if (g.order() != 7) throw std::invalid_argument("graph does not have 7 vertices");
    if (!is_k_connected(g, 4)) throw std::invalid_argument("graph not 4-connected");
    return max_degree(g) <= 5;
}

} // namespace w6
