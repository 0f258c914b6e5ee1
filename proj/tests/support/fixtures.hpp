#pragma once

#include <vector>

#include "markovrank/graph.hpp"
#include "markovrank/matrix.hpp"

namespace mrank::fixtures {

inline AdjacencyMatrix adjacency(const std::vector<std::vector<double>>& rows) {
    return AdjacencyMatrix(Matrix::from_rows(rows));
}

// Three-state weather-style chain, column-stochastic.
inline Matrix three_state_chain() {
    return Matrix::from_rows({{0.70, 0.15, 0.30}, {0.20, 0.80, 0.20}, {0.10, 0.05, 0.50}});
}

inline AdjacencyMatrix four_node() {
    return adjacency({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}});
}

// Four nodes where node 4 follows nobody.
inline AdjacencyMatrix four_node_zero_row() {
    return adjacency({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}});
}

inline AdjacencyMatrix example1() {
    return adjacency({{0, 1, 0, 1, 1, 1},
                      {1, 0, 0, 0, 0, 0},
                      {0, 1, 0, 0, 1, 0},
                      {0, 1, 0, 0, 0, 0},
                      {0, 0, 1, 1, 0, 0},
                      {0, 0, 0, 0, 0, 0}});
}

inline AdjacencyMatrix example_a() { return adjacency({{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}); }

inline AdjacencyMatrix example_b() {
    return adjacency({{0, 1, 1, 1, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}});
}

inline AdjacencyMatrix example_c() {
    return adjacency({{0, 1, 1, 1, 1, 1},
                      {0, 0, 1, 1, 0, 0},
                      {0, 1, 0, 0, 0, 0},
                      {0, 1, 1, 0, 0, 0},
                      {0, 0, 0, 0, 0, 1},
                      {0, 0, 0, 0, 1, 0}});
}

inline AdjacencyMatrix example_d() {
    return adjacency({{0, 1, 0, 0, 0, 0},
                      {0, 0, 1, 0, 1, 1},
                      {1, 0, 0, 0, 1, 0},
                      {1, 1, 1, 0, 0, 0},
                      {1, 0, 0, 1, 0, 1},
                      {1, 0, 1, 1, 0, 0}});
}

inline AdjacencyMatrix k2() { return adjacency({{0, 1}, {1, 0}}); }

}  // namespace mrank::fixtures
