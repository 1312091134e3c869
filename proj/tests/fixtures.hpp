#pragma once

#include "lexconn/graph.hpp"

namespace lexconn::testing {

// The five-vertex counterexample graph with x1..x5 relabeled to 0..4.
inline Graph counterexample_g1() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {3, 4}}); }

// K2 u K1: an edge 0-1 plus the isolated vertex 2.
inline Graph k2_plus_k1() { return Graph(3, {{0, 1}}); }

}  // namespace lexconn::testing
