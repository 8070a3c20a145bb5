// Acceptance gate: one line per criterion, each with a pinned wall-clock
// budget. A criterion passes only if its property holds AND it finishes
// inside the budget. Exit 0 iff all pass.
//
// Randomized criteria draw from a fixed default seed; override with
// --seed N to probe other samples.

#include "oracles.hpp"
#include "w6/canonical.hpp"
#include "w6/chains.hpp"
#include "w6/connectivity.hpp"
#include "w6/constructors.hpp"
#include "w6/graph.hpp"
#include "w6/hamilton.hpp"
#include "w6/minor.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace w6;

namespace {

std::uint32_t g_seed = 20240817;

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
    std::set<CanonicalForm> out;
    for (const Graph& g : graphs) out.insert(canonical_form(g));
    return out;
}

std::set<CanonicalForm> free_split_forms(const Graph& g) {
    std::set<CanonicalForm> out;
    for (const Graph& h : enumerate_splits(g, true))
        if (is_w6_minor_free(h)) out.insert(canonical_form(h));
    return out;
}

bool catalog_integrity(std::string& detail) {
    const auto& entries = catalog();
    if (entries.size() != 14) {
        detail = "expected 14 entries, got " + std::to_string(entries.size());
        return false;
    }
    std::map<int, int> profile;
    std::set<CanonicalForm> forms;
    for (const CatalogEntry& e : entries) {
        if (!forms.insert(e.canonical).second) {
            detail = "duplicate isomorphism class: " + e.name;
            return false;
        }
        if (!is_k_connected(e.graph, 4)) {
            detail = e.name + " is not 4-connected";
            return false;
        }
        if (!is_w6_minor_free(e.graph)) {
            detail = e.name + " has a W6 minor";
            return false;
        }
        ++profile[e.order];
    }
    if (profile != std::map<int, int>{{5, 1}, {6, 4}, {7, 8}, {8, 1}}) {
        detail = "order profile differs from 5:1 6:4 7:8 8:1";
        return false;
    }
    return true;
}

bool squared_cycle_threshold(std::string& detail) {
    for (int n = 5; n <= 12; ++n) {
        bool expected = n >= 9;
        if (has_minor(construct(Family::squared_cycle, n), wheel_w6()) != expected) {
            detail = "wrong answer at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool expect_split_forms(const Graph& base, const std::set<CanonicalForm>& expected,
                        bool only_free, std::string& detail) {
    std::set<CanonicalForm> got =
        only_free ? free_split_forms(base) : forms_of(enumerate_splits(base, true));
    if (got != expected) {
        detail = "got " + std::to_string(got.size()) + " classes, expected " +
                 std::to_string(expected.size());
        return false;
    }
    return true;
}

bool splits_of_c25(std::string& detail) {
    return expect_split_forms(construct(Family::squared_cycle, 5),
                              {canonical_form(construct(Family::complete, 6)),
                               canonical_form(special("K6_minus_e")),
                               canonical_form(construct(Family::double_wheel_plus, 4))},
                              false, detail);
}

bool splits_of_k6_all_have_w6(std::string& detail) {
    for (const Graph& h : enumerate_splits(construct(Family::complete, 6), true)) {
        if (is_w6_minor_free(h)) {
            detail = "W6-minor-free split found: " + canonical_form(h);
            return false;
        }
    }
    return true;
}

bool splits_of_k6e(std::string& detail) {
    return expect_split_forms(special("K6_minus_e"),
                              {canonical_form(special("K43_31")),
                               canonical_form(special("K43_41"))},
                              true, detail);
}

bool splits_of_dwp4(std::string& detail) {
    return expect_split_forms(construct(Family::double_wheel_plus, 4),
                              {canonical_form(special("C27_plus_e")),
                               canonical_form(special("K43_30")),
                               canonical_form(special("K43_31")),
                               canonical_form(special("K43_40")),
                               canonical_form(special("Gamma1")),
                               canonical_form(special("K43_41"))},
                              true, detail);
}

bool planar_splits_of_c26(std::string& detail) {
    std::set<CanonicalForm> got;
    for (const Graph& h : enumerate_splits(construct(Family::squared_cycle, 6), true))
        if (is_w6_minor_free(h) && is_planar(h)) got.insert(canonical_form(h));
    if (got != std::set<CanonicalForm>{canonical_form(construct(Family::double_wheel, 5))}) {
        detail = "expected exactly DW_5, got " + std::to_string(got.size()) + " classes";
        return false;
    }
    return true;
}

bool splits_of_7vertex_catalog(std::string& detail) {
    for (const CatalogEntry& e : catalog()) {
        if (e.order != 7) continue;
        for (const Graph& h : enumerate_splits(e.graph, true)) {
            if (is_w6_minor_free(h)) {
                detail = "W6-minor-free split of " + e.name + ": " + canonical_form(h);
                return false;
            }
        }
    }
    return true;
}

bool degree_bound_at_order_7(std::string& detail) {
    int checked = 0;
    for (const Graph& g : enumerate_graphs(7, 4)) {
        if (!is_k_connected(g, 4)) continue;
        ++checked;
        bool by_degree = max_degree(g) <= 5;
        if (by_degree != !has_minor(g, wheel_w6()) || by_degree != w6_free_7vertex(g)) {
            detail = "mismatch on " + emit_graph6(g);
            return false;
        }
    }
    if (checked == 0) {
        detail = "no 4-connected graphs enumerated";
        return false;
    }
    detail = std::to_string(checked) + " graphs";
    return true;
}

bool cubic_line_graphs(std::string& detail) {
    auto cubics = generate_cyclically_4conn_cubic(12);
    std::set<CanonicalForm> produced;
    for (const Graph& g : cubics) {
        produced.insert(canonical_form(g));
        if (!has_minor(line_graph(g), wheel_w6())) {
            detail = "line graph without W6 minor, root " + emit_graph6(g);
            return false;
        }
    }
    if (!produced.contains(canonical_form(special("k33"))) ||
        !produced.contains(canonical_form(special("cube")))) {
        detail = "generation missed K33 or the cube";
        return false;
    }
    detail = std::to_string(cubics.size()) + " cubic graphs";
    return true;
}

bool hamilton_at_order_6(std::string& detail) {
    auto classes = enumerate_graphs(6, 0);
    if (classes.size() != 156) {
        detail = "expected 156 classes, got " + std::to_string(classes.size());
        return false;
    }
    int in_scope = 0, non_hamiltonian = 0;
    for (const Graph& g : classes) {
        DegreeSequence d = degree_sequence(g);
        if (chvatal_holds(d) && !find_hamiltonian_cycle(g)) {
            detail = "degree criterion holds but no cycle: " + emit_graph6(g);
            return false;
        }
        if (!(d[0] == 2 && d[1] == 2 && d[2] >= 3)) continue;
        ++in_scope;
        HamiltonClass cls = classify_hamilton_exception(g);
        bool ham = find_hamiltonian_cycle(g).has_value();
        if (ham != (cls == HamiltonClass::hamiltonian)) {
            detail = "classifier disagrees with search on " + emit_graph6(g);
            return false;
        }
        if (!ham) ++non_hamiltonian;
    }
    if (in_scope == 0 || non_hamiltonian == 0) {
        detail = "scope unexpectedly empty";
        return false;
    }
    detail = std::to_string(in_scope) + " graphs in scope, " +
             std::to_string(non_hamiltonian) + " non-Hamiltonian";
    return true;
}

bool theorem_certification(std::string& detail) {
    TheoremReport r7 = verify_theorem(7);
    int total = 0;
    for (const auto& line : r7.orders) total += line.count;
    if (!r7.ok || total != 13) {
        detail = "order <= 7 certification failed:\n" + r7.render();
        return false;
    }
    TheoremReport r8 = verify_theorem(8);
    if (!r8.ok) {
        detail = "order 8 stretch failed:\n" + r8.render();
        return false;
    }
    const auto& last = r8.orders.back();
    if (last.order != 8 || last.count != 1 || last.names != std::vector<std::string>{"C2_8"}) {
        detail = "order 8 must contribute exactly C2_8";
        return false;
    }
    detail = "orders 5..7 required, order 8 stretch";
    return true;
}

bool minor_oracle_agreement(std::string& detail) {
    std::mt19937 rng(g_seed);
    const Graph patterns[] = {construct(Family::complete, 4), construct(Family::complete, 5),
                              construct(Family::complete_bipartite, 3, 3),
                              construct(Family::wheel, 5), wheel_w6()};
    std::uniform_int_distribution<int> order_dist(4, 7);
    std::uniform_int_distribution<std::size_t> pattern_dist(0, 4);
    std::uniform_real_distribution<double> density(0.3, 0.8);
    for (int pair = 0; pair < 500; ++pair) {
        Graph g = random_graph(order_dist(rng), density(rng), rng);
        const Graph& h = patterns[pattern_dist(rng)];
        if (has_minor(g, h) != oracles::brute_has_minor(g, h)) {
            detail = "disagreement: g = " + emit_graph6(g) + ", h = " + emit_graph6(h);
            return false;
        }
    }
    return true;
}

bool graph6_round_trip(std::string& detail) {
    std::mt19937 rng(g_seed);
    std::uniform_int_distribution<int> order_dist(0, 7);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(order_dist(rng), density(rng), rng);
        std::string s = emit_graph6(g);
        Graph back = parse_graph6(s);
        if (back != g || emit_graph6(back) != s) {
            detail = "round trip broke on " + s;
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            g_seed = static_cast<std::uint32_t>(std::stoul(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--seed N]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "catalog: 14 classes, profile 5:1 6:4 7:8 8:1, all 4-connected W6-minor-free", 10,
         catalog_integrity},
        {2, "squared cycles acquire a W6 minor exactly from order 9 (n = 5..12)", 30,
         squared_cycle_threshold},
        {3, "4-connected splits of C2_5 are exactly {K6, K6-e, DW+_4}", 5, splits_of_c25},
        {4, "every 4-connected split of K6 has a W6 minor", 60, splits_of_k6_all_have_w6},
        {5, "W6-minor-free 4-connected splits of K6-e are exactly {K43_31, K43_41}", 60,
         splits_of_k6e},
        {6, "W6-minor-free 4-connected splits of DW+_4 are exactly 6 known classes", 60,
         splits_of_dwp4},
        {7, "planar W6-minor-free 4-connected splits of C2_6 are exactly {DW_5}", 60,
         planar_splits_of_c26},
        {8, "every 4-connected split of every 7-vertex catalog graph has a W6 minor", 600,
         splits_of_7vertex_catalog},
        {9, "across 4-connected 7-vertex graphs, W6-minor-freeness = max degree <= 5", 600,
         degree_bound_at_order_7},
        {10, "line graphs of generated cubics (<= 12 vertices, incl. K33, cube) have W6 minors",
         600, cubic_line_graphs},
        {11, "order 6 exhaustive: degree criterion implies Hamiltonian; exceptions exact", 60,
         hamilton_at_order_6},
        {12, "exhaustive certification: orders 5..7 give the 13 catalog classes; order 8 adds C2_8",
         1800, theorem_certification},
        {13, "minor search agrees with delete/contract recursion on 500 random pairs", 600,
         minor_oracle_agreement},
        {14, "graph6 round trip is bit-exact on 10000 sampled graphs (n <= 7)", 60,
         graph6_round_trip},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed <= c.budget_seconds;
        bool pass = ok && in_budget;
        all_pass = all_pass && pass;
        std::printf("%s %2d. %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id,
                    c.label, elapsed, c.budget_seconds,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (ok && !in_budget) std::printf("      over budget\n");
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return all_pass ? 0 : 1;
}
