#include "w6/constructors.hpp"

#include "w6/chains.hpp"
#include "w6/connectivity.hpp"
#include "w6/minor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace w6 {

namespace {

void require_domain(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("parameter out of domain for " + what);
}

std::vector<Edge> cycle_edges(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.push_back({i, (i + 1) % k});
    return es;
}

Graph build_family(Family family, int k) {
    switch (family) {
    case Family::cycle:
        require_domain(k >= 3, "cycle");
        return Graph(k, cycle_edges(k));
    case Family::wheel: {
        require_domain(k >= 3, "wheel");
        std::vector<Edge> es = cycle_edges(k);
        for (int i = 0; i < k; ++i) es.push_back({i, k});
        return Graph(k + 1, es);
    }
    case Family::squared_cycle: {
        require_domain(k >= 5, "squared cycle");
        std::vector<Edge> es = cycle_edges(k);
        for (int i = 0; i < k; ++i) es.push_back({i, (i + 2) % k});
        return Graph(k, es);
    }
    case Family::double_wheel:
    case Family::double_wheel_plus: {
        require_domain(k >= 3, "double wheel");
        std::vector<Edge> es = cycle_edges(k);
        for (int i = 0; i < k; ++i) {
            es.push_back({i, k});
            es.push_back({i, k + 1});
        }
        if (family == Family::double_wheel_plus) es.push_back({k, k + 1});
        return Graph(k + 2, es);
    }
    case Family::complete: {
        require_domain(k >= 1, "complete graph");
        std::vector<Edge> es;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) es.push_back({i, j});
        return Graph(k, es);
    }
    case Family::complete_bipartite:
        throw std::invalid_argument("complete bipartite family needs two part sizes");
    }
    throw std::invalid_argument("unknown family");
}

bool keeps_catalog_properties(const Graph& g) {
    return is_k_connected(g, 4) && is_w6_minor_free(g);
}

// The bipartite complement K_{4,3} (parts {0..3}, {4..6}) augmented by i
// edges inside the 4-part and j inside the 3-part is required to have a
// unique 4-connected W6-minor-free completion; enumerate all placements
// and check uniqueness, then return the documented representative.
Graph unique_k43_variant(int i, int j, const Graph& documented) {
    Graph base = construct(Family::complete_bipartite, 4, 3);
    std::vector<Edge> part1_pairs, part2_pairs;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) part1_pairs.push_back({a, b});
    for (int a = 4; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) part2_pairs.push_back({a, b});

    std::set<CanonicalForm> classes;
    // iterate over all i-subsets of part1_pairs and j-subsets of part2_pairs
    auto choose = [](int total, int want, auto&& emit) {
        std::vector<int> idx(static_cast<std::size_t>(want));
        auto rec = [&](auto&& self, int pos, int from) -> void {
            if (pos == want) {
                emit(idx);
                return;
            }
            for (int x = from; x < total; ++x) {
                idx[static_cast<std::size_t>(pos)] = x;
                self(self, pos + 1, x + 1);
            }
        };
        rec(rec, 0, 0);
    };
    choose(static_cast<int>(part1_pairs.size()), i, [&](const std::vector<int>& s1) {
        choose(static_cast<int>(part2_pairs.size()), j, [&](const std::vector<int>& s2) {
            std::vector<Edge> es = base.edges();
            for (int x : s1) es.push_back(part1_pairs[static_cast<std::size_t>(x)]);
            for (int x : s2) es.push_back(part2_pairs[static_cast<std::size_t>(x)]);
            Graph g(7, es);
            if (keeps_catalog_properties(g)) classes.insert(canonical_form(g));
        });
    });
    if (classes.size() != 1)
        throw std::logic_error("bipartite-augmentation oracle: expected a unique class, found " +
                               std::to_string(classes.size()));
    if (*classes.begin() != canonical_form(documented))
        throw std::logic_error("bipartite-augmentation oracle disagrees with documented placement");
    return documented;
}

// The unique 4-connected W6-minor-free split of a degree-4 vertex of
// DW+_4 (all rim vertices are equivalent under its symmetry, so splitting
// vertex 0 suffices).
Graph unique_rim_split_of_dwplus4() {
    Graph base = construct(Family::double_wheel_plus, 4);
    std::map<CanonicalForm, Graph> classes;
    for (const SplitSpec& s : split_specs_of_vertex(base, 0)) {
        Graph g = apply_split(base, s);
        if (keeps_catalog_properties(g)) classes.emplace(canonical_form(g), std::move(g));
    }
    if (classes.size() != 1)
        throw std::logic_error("rim-split oracle: expected a unique class, found " +
                               std::to_string(classes.size()));
    return classes.begin()->second;
}

std::map<std::string, Graph> build_specials() {
    std::map<std::string, Graph> m;
    {
        std::vector<Edge> es;
        for (int i = 0; i < 5; ++i) {
            es.push_back({i, (i + 1) % 5});
            es.push_back({i + 5, (i + 2) % 5 + 5});
            es.push_back({i, i + 5});
        }
        m.emplace("petersen", Graph(10, es));
    }
    m.emplace("cube", Graph(8, std::vector<Edge>{{0, 1},
                                                 {1, 2},
                                                 {2, 3},
                                                 {0, 3},
                                                 {4, 5},
                                                 {5, 6},
                                                 {6, 7},
                                                 {4, 7},
                                                 {0, 4},
                                                 {1, 5},
                                                 {2, 6},
                                                 {3, 7}}));
    m.emplace("k33", construct(Family::complete_bipartite, 3, 3));
    // x = 0 and y = 1 are the degree-2 vertices; 2 is adjacent to
    // everything; {3,4,5} form a triangle
    m.emplace("J", Graph(6, std::vector<Edge>{{0, 1},
                                              {0, 2},
                                              {1, 2},
                                              {2, 3},
                                              {2, 4},
                                              {2, 5},
                                              {3, 4},
                                              {3, 5},
                                              {4, 5}}));
    {
        // documented placements: a path inside the 4-part for the 3-edge
        // variants, a quadrilateral for the 4-edge variants, and one
        // 3-part edge when j = 1 (all such edges are symmetric)
        Graph base = construct(Family::complete_bipartite, 4, 3);
        Graph p4 = add_edge(add_edge(add_edge(base, 0, 1), 1, 2), 2, 3);
        Graph c4 = add_edge(p4, 0, 3);
        m.emplace("K43_30", unique_k43_variant(3, 0, p4));
        m.emplace("K43_31", unique_k43_variant(3, 1, add_edge(p4, 4, 5)));
        m.emplace("K43_40", unique_k43_variant(4, 0, c4));
        m.emplace("K43_41", unique_k43_variant(4, 1, add_edge(c4, 4, 5)));
    }
    m.emplace("Gamma1", unique_rim_split_of_dwplus4());
    m.emplace("C27_plus_e", add_edge(construct(Family::squared_cycle, 7), 0, 3));
    m.emplace("K6_minus_e", delete_edge(construct(Family::complete, 6), {0, 1}));
    return m;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<std::pair<std::string, Graph>> named;
    named.emplace_back("C2_5", construct(Family::squared_cycle, 5));
    named.emplace_back("C2_6", construct(Family::squared_cycle, 6));
    named.emplace_back("C2_7", construct(Family::squared_cycle, 7));
    named.emplace_back("C2_8", construct(Family::squared_cycle, 8));
    named.emplace_back("DW+_4", construct(Family::double_wheel_plus, 4));
    named.emplace_back("K6-e", special("K6_minus_e"));
    named.emplace_back("K6", construct(Family::complete, 6));
    named.emplace_back("C2_7+e", special("C27_plus_e"));
    named.emplace_back("DW_5", construct(Family::double_wheel, 5));
    named.emplace_back("K43_30", special("K43_30"));
    named.emplace_back("K43_31", special("K43_31"));
    named.emplace_back("K43_40", special("K43_40"));
    named.emplace_back("Gamma1", special("Gamma1"));
    named.emplace_back("K43_41", special("K43_41"));

    std::vector<CatalogEntry> entries;
    entries.reserve(named.size());
    for (auto& [name, g] : named) {
        CanonicalForm form = canonical_form(g);
        entries.push_back(CatalogEntry{name, std::move(g), std::move(form), 0});
        entries.back().order = entries.back().graph.order();
    }
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.canonical < b.canonical;
    });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].canonical == entries[i - 1].canonical)
            throw std::logic_error("catalog entries " + entries[i - 1].name + " and " +
                                   entries[i].name + " are isomorphic");
    return entries;
}

} // namespace

Graph construct(Family family, int k) { return build_family(family, k); }

Graph construct(Family family, int a, int b) {
    if (family != Family::complete_bipartite)
        throw std::invalid_argument("two-parameter construct is only for complete bipartite");
    require_domain(a >= 1 && b >= 1, "complete bipartite");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(a + b, es);
}

const Graph& special(const std::string& name) {
    static const std::map<std::string, Graph> specials = build_specials();
    auto it = specials.find(name);
    if (it == specials.end()) throw std::invalid_argument("unknown special graph: " + name);
    return it->second;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::optional<std::string> catalog_lookup(const Graph& g) {
    CanonicalForm form = canonical_form(g);
    for (const CatalogEntry& e : catalog())
        if (e.canonical == form) return e.name;
    return std::nullopt;
}

} // namespace w6
