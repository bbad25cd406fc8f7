// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "warb/graph.hpp"

namespace fixtures {

using warb::build_graph;
using warb::WeightedGraph;

/// Triangle v1 v2 v3 (c = 2, 1, 3) with pendant v4 attached by c = 1 and c = 2.
inline WeightedGraph foster_example() {
  return build_graph(4, {{0, 1, 2.0}, {0, 2, 1.0}, {1, 2, 3.0}, {1, 3, 1.0}, {2, 3, 2.0}});
}

/// Weighted tree with 12 vertices, heaviest edge 4.
inline WeightedGraph tree_t1() {
  return build_graph(12, {{0, 1, 1.0},
                          {0, 2, 3.0},
                          {0, 3, 2.0},
                          {1, 4, 1.5},
                          {1, 5, 0.8},
                          {2, 6, 2.2},
                          {2, 7, 1.1},
                          {3, 8, 4.0},
                          {8, 9, 1.7},
                          {8, 10, 0.9},
                          {10, 11, 2.8}});
}

/// Weighted tree with 12 vertices, heaviest edge 5.
inline WeightedGraph tree_t2() {
  return build_graph(12, {{0, 1, 2.0},
                          {0, 2, 1.0},
                          {1, 3, 3.0},
                          {1, 4, 1.5},
                          {2, 5, 0.7},
                          {2, 6, 2.2},
                          {2, 7, 5.0},
                          {7, 8, 1.1},
                          {7, 9, 2.8},
                          {9, 10, 1.9},
                          {9, 11, 4.2}});
}

/// Triangle with every conductance 2.
inline WeightedGraph heavy_triangle() { return build_graph(3, {{0, 1, 2.0}, {0, 2, 2.0}, {1, 2, 2.0}}); }

/// Two-edge path with conductances 1 and 2.
inline WeightedGraph light_path() { return build_graph(3, {{0, 1, 1.0}, {1, 2, 2.0}}); }

}  // namespace fixtures
