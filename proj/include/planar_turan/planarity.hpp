#pragma once

#include <cstddef>

#include "planar_turan/graph.hpp"

namespace planar_turan {

enum class EulerVerdict { nonplanar, inconclusive };

// Edge-count necessary conditions: m <= 3n-6, and m <= 2n-4 for bipartite
// graphs, both for n >= 3.
EulerVerdict euler_filter(const Graph& g);

// Left-right (edge orientation) planarity criterion. Linear time.
bool is_planar(const Graph& g);

// Deterministic stacked triangulation on m >= 3 vertices with 3m-6 edges.
Graph maximal_planar(std::size_t m);

// The 5-regular triangulation on 12 vertices.
Graph icosahedron();

}  // namespace planar_turan
