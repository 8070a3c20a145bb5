#include "w6/canonical.hpp"

#include <algorithm>
#include <cstdint>

namespace w6 {

namespace {

// Ordered partition of the vertex set, refined until equitable: every vertex
// in a cell has the same number of neighbors in every cell. Cells are kept in
// a deterministic order (split parts sorted by their neighbor-count
// signature), which makes the refinement isomorphism-invariant.
using Cells = std::vector<std::vector<int>>;

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        Cells cells{std::vector<int>(static_cast<std::size_t>(n_))};
        for (int v = 0; v < n_; ++v) cells[0][static_cast<std::size_t>(v)] = v;
        refine(cells);
        descend(cells);
        return best_label_;
    }

private:
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            Cells next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // signature of v = count of neighbors in each current cell
                std::vector<std::pair<std::vector<int>, int>> sig;
                sig.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> counts(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        int k = 0;
                        for (int w : cells[c])
                            if (g_.has_edge(v, w)) ++k;
                        counts[c] = k;
                    }
                    sig.emplace_back(std::move(counts), v);
                }
                std::sort(sig.begin(), sig.end());
                std::size_t start = 0;
                for (std::size_t i = 1; i <= sig.size(); ++i) {
                    if (i == sig.size() || sig[i].first != sig[start].first) {
                        std::vector<int> part;
                        part.reserve(i - start);
                        for (std::size_t j = start; j < i; ++j) part.push_back(sig[j].second);
                        std::sort(part.begin(), part.end());
                        next.push_back(std::move(part));
                        if (i - start != sig.size()) changed = true;
                        start = i;
                    }
                }
            }
            cells = std::move(next);
        }
    }

    void descend(const Cells& cells) {
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) {
            visit_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (pruned_by_automorphism(v, tried)) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(cells[i].size() - 1);
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            refine(child);
            base_.push_back(v);
            descend(child);
            base_.pop_back();
        }
    }

    // Skip candidate v when a known automorphism fixes the current base
    // pointwise and maps v into an already-explored sibling: the two subtrees
    // are images of each other and yield the same minimum.
    bool pruned_by_automorphism(int v, const std::vector<int>& tried) const {
        for (const auto& a : autos_) {
            bool fixes_base = true;
            for (int b : base_) {
                if (a[static_cast<std::size_t>(b)] != b) {
                    fixes_base = false;
                    break;
                }
            }
            if (!fixes_base) continue;
            int img = a[static_cast<std::size_t>(v)];
            if (img != v && std::find(tried.begin(), tried.end(), img) != tried.end())
                return true;
        }
        return false;
    }

    void visit_leaf(const Cells& cells) {
        std::vector<int> label(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i)
            label[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
        std::vector<std::uint8_t> bits = pack_bits(label);
        if (!have_best_ || bits < best_bits_) {
            best_bits_ = std::move(bits);
            best_label_ = label;
            best_at_position_.assign(static_cast<std::size_t>(n_), 0);
            for (int v = 0; v < n_; ++v)
                best_at_position_[static_cast<std::size_t>(best_label_[static_cast<std::size_t>(v)])] = v;
            have_best_ = true;
        } else if (bits == best_bits_) {
            // label and best_label_ describe the same labeled graph, so
            // best_label^{-1} . label is an automorphism
            std::vector<int> a(static_cast<std::size_t>(n_));
            bool identity = true;
            for (int v = 0; v < n_; ++v) {
                a[static_cast<std::size_t>(v)] =
                    best_at_position_[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
                if (a[static_cast<std::size_t>(v)] != v) identity = false;
            }
            if (!identity) autos_.push_back(std::move(a));
        }
    }

    std::vector<std::uint8_t> pack_bits(const std::vector<int>& label) const {
        std::vector<int> at(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) at[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
        std::vector<std::uint8_t> out;
        out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_) / 16 + 1);
        std::uint8_t cur = 0;
        int used = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                cur = static_cast<std::uint8_t>(
                    cur << 1 |
                    (g_.has_edge(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]) ? 1 : 0));
                if (++used == 8) {
                    out.push_back(cur);
                    cur = 0;
                    used = 0;
                }
            }
        }
        if (used > 0) out.push_back(static_cast<std::uint8_t>(cur << (8 - used)));
        return out;
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint8_t> best_bits_;
    std::vector<int> best_label_;
    std::vector<int> best_at_position_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> base_;
};

} // namespace

std::vector<int> canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

Graph canonicalize(const Graph& g) {
    std::vector<int> label = canonical_labeling(g);
    return relabel(g, label);
}

CanonicalForm canonical_form(const Graph& g) { return emit_graph6(canonicalize(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    if (degree_sequence(g) != degree_sequence(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace w6
