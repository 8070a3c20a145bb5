#pragma once

#include "w6/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace w6 {

// Witness that h is a minor of g: branch_sets[i] is the set of g-vertices
// contracted to form h-vertex i. Sets are nonempty and pairwise disjoint,
// each induces a connected subgraph of g, and edge_witnesses pairs every
// h-edge with a g-edge joining the two corresponding branch sets.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
    std::vector<std::pair<Edge, Edge>> edge_witnesses;
};

// True iff h is a minor of g.
bool has_minor(const Graph& g, const Graph& h);

// A minor model of h in g, or nullopt. Deterministic: repeated calls on
// equal inputs return the same model. Branch sets are grown smallest-first,
// so returned models are inclusion-lean.
std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h);

// Check a claimed model without trusting the search. On failure
// *violated_clause (when non-null) names the first broken requirement:
// "coverage", "range", "disjointness", "connectivity", or "adjacency".
bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& model,
                        std::string* violated_clause = nullptr);

// True iff g contains a subdivision of h: an injective placement of
// h-vertices on g-vertices of sufficient degree joined by internally
// disjoint paths.
bool has_topological_minor(const Graph& g, const Graph& h);

// The wheel on seven vertices: rim cycle 0..5 plus hub 6 joined to all.
Graph wheel_w6();

// True iff g has no minor isomorphic to wheel_w6().
bool is_w6_minor_free(const Graph& g);

// Fast W6-minor-freeness for 4-connected graphs on exactly 7 vertices,
// where freeness is equivalent to maximum degree <= 5. Throws
// std::invalid_argument when g is not 4-connected on 7 vertices.
bool w6_free_7vertex(const Graph& g);

} // namespace w6
