#pragma once

#include <cstddef>

#include "lexconn/graph.hpp"

namespace lexconn {

/// Maximum number of internally vertex-disjoint s-t paths, computed as a
/// unit-capacity max flow on the vertex-split graph. `s` and `t` must be
/// distinct and non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t);

/// Vertex connectivity. 0 for disconnected graphs and K1, n-1 for K_n.
/// Otherwise the minimum local connectivity over the pairs required by the
/// Esfahanian-Hakimi strategy: a minimum-degree vertex v against each of its
/// non-neighbors, and each non-adjacent pair of neighbors of v.
std::size_t vertex_connectivity(const Graph& g);

/// A vertex cut of size vertex_connectivity(g). Empty for disconnected
/// graphs and K1; {0..n-2} for K_n.
VertexSet minimum_vertex_cut(const Graph& g);

}  // namespace lexconn
