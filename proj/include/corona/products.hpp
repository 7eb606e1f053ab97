#pragma once

#include "corona/graph.hpp"

namespace corona {

/// One copy of g1 plus a copy of g2 per g1-vertex; copy i is joined to every
/// g1-neighbour of vertex i. Vertices 0..n1-1 are g1; copy i occupies the
/// contiguous block n1 + i*n2 .. n1 + (i+1)*n2 - 1 (copy-major order).
Graph neighbourhood_corona(const Graph& g1, const Graph& g2);

/// One copy of g1 plus a copy of g2 per g1-edge; copy i is joined to both
/// endpoints of the i-th edge in lexicographic order. g1 vertices first,
/// copy i in the block n1 + i*n2 .. n1 + (i+1)*n2 - 1.
Graph edge_corona(const Graph& g1, const Graph& g2);

}  // namespace corona
