#pragma once

#include "w6/canonical.hpp"
#include "w6/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace w6 {

// Parameterized families. Rim vertices are labeled 0..k-1 in cycle order;
// hub vertices are appended after the rim. complete_bipartite takes two
// part sizes via the two-argument construct overload.
enum class Family {
    cycle,             // C_k, k >= 3
    wheel,             // W_k: C_k plus a hub joined to all rim vertices, k >= 3
    squared_cycle,     // C2_k: C_k plus chords at cycle distance two, k >= 5
    double_wheel,      // DW_k: C_k plus two nonadjacent hubs, k >= 3
    double_wheel_plus, // DW+_k: DW_k plus the hub-hub edge, k >= 3
    complete,          // K_k, k >= 1
    complete_bipartite // K_{a,b}, a, b >= 1; part A = 0..a-1, part B appended
};

// Build family member k (or K_{a,b} for the two-parameter form). Throws
// std::invalid_argument when k is outside the family's domain.
Graph construct(Family family, int k);
Graph construct(Family family, int a, int b);

// Named one-off graphs: "petersen", "cube", "k33", "J", "K43_30", "K43_31",
// "K43_40", "K43_41", "Gamma1", "C27_plus_e", "K6_minus_e". The K43 variants
// and Gamma1 are defined as the unique isomorphism class passing their
// construction constraints; a brute-force uniqueness oracle runs on first
// use and throws std::logic_error if the class is not unique. Unknown name
// throws std::invalid_argument.
const Graph& special(const std::string& name);

struct CatalogEntry {
    std::string name;
    Graph graph;
    CanonicalForm canonical;
    int order;
};

// The fourteen 4-connected W6-minor-free graphs, sorted by (order,
// canonical form). Computed once, then shared read-only.
const std::vector<CatalogEntry>& catalog();

// Name of the catalog entry isomorphic to g, or nullopt.
std::optional<std::string> catalog_lookup(const Graph& g);

} // namespace w6
