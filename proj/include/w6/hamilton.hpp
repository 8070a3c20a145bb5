#pragma once

#include "w6/graph.hpp"

#include <optional>
#include <vector>

namespace w6 {

// Vertex sequence v_0..v_{n-1} visiting every vertex once; consecutive
// entries and (v_{n-1}, v_0) are adjacent.
using HamiltonCycle = std::vector<int>;

// Backtracking search with forced-edge pruning. Deterministic: starts at
// vertex 0, extends along ascending neighbors, so the returned cycle is
// stable across runs.
std::optional<HamiltonCycle> find_hamiltonian_cycle(const Graph& g);

// Degree-sequence criterion: with d sorted ascending and n = d.size(),
// holds iff for every i < n/2 (1-based), d_i >= i + 1 or d_{n-i} >= n - i.
// Implies Hamiltonicity. Throws std::invalid_argument when d has fewer
// than 3 entries.
bool chvatal_holds(const DegreeSequence& d);

// Outcome classes for 6-vertex graphs whose two smallest degrees are
// exactly 2: such a graph is Hamiltonian unless it falls in one of two
// exception shapes.
enum class HamiltonClass {
    hamiltonian,
    // the two degree-2 vertices are nonadjacent with equal neighbor pairs
    shared_neighbor_exception,
    // isomorphic to special("J")
    j_exception,
};

// Classify g structurally (neighbor-pair equality, isomorphism to J);
// agrees with find_hamiltonian_cycle. Requires n = 6 and sorted degrees
// d1 = d2 = 2, d3 >= 3; throws std::invalid_argument otherwise.
HamiltonClass classify_hamilton_exception(const Graph& g);

} // namespace w6
