#pragma once

#include "w6/graph.hpp"

#include <vector>

namespace w6 {

// Witness for kappa(g) = cut.size(): removing the cut disconnects side_a
// from side_b. For complete graphs no separator exists and the certificate
// is empty (kappa = n - 1 by convention).
struct SeparatorCertificate {
    std::vector<int> cut;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// Vertex connectivity. kappa(K_n) = n - 1, kappa of a disconnected graph is
// 0, kappa(K_1) = 0. When certificate is non-null and the graph is not
// complete, a minimum separator is written to it.
int vertex_connectivity(const Graph& g, SeparatorCertificate* certificate = nullptr);

// True iff kappa(g) >= k. Cheaper than computing kappa exactly: each
// max-flow run stops once k internally disjoint paths are found.
bool is_k_connected(const Graph& g, int k);

// Cyclic 4-edge-connectivity check for cubic graphs: no set of at most 3
// edges whose removal leaves two components that both contain a cycle.
// Throws std::invalid_argument("graph not cubic") on non-cubic input.
bool is_cyclically_4_connected_cubic(const Graph& g);

// Planarity via forbidden minors: planar iff no K5 minor and no K33 minor.
bool is_planar(const Graph& g);

} // namespace w6
