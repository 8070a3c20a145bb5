#pragma once

#include <string>
#include <vector>

#include "w6/graph.hpp"

namespace w6 {

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// graph under its canonical labeling. Two graphs have equal canonical forms
/// if and only if they are isomorphic.
using CanonicalForm = std::string;

/// Canonical labeling: position labeling[v] of vertex v in the canonical
/// order. Computed by iterative degree/neighborhood refinement with a full
/// backtracking search over the remaining cells, pruned by discovered
/// automorphisms. Intended for order <= 16; correct for any order <= 64.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into canonical position order.
Graph canonicalize(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace w6
