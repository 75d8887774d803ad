#pragma once

#include <random>

#include "flexpoly/mesh.hpp"
#include "support/oracles.hpp"

namespace fixtures {

using flexpoly::SurfaceComplex;

inline SurfaceComplex tetrahedron() {
  return {{1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
}

/// Two cones over the triangle 123 with apexes 4 and 5.
inline SurfaceComplex bipyramid() {
  return {{1, 2, 3, 4, 5},
          {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}},
          {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}, {2, 1, 5}, {3, 2, 5}, {1, 3, 5}}};
}

/// Octahedron: poles 1 and 6 over the square 2345.
inline SurfaceComplex octahedron() {
  SurfaceComplex c;
  c.vertex_ids = {1, 2, 3, 4, 5, 6};
  const int ring[4] = {2, 3, 4, 5};
  for (int i = 0; i < 4; ++i) {
    const int a = ring[i], b = ring[(i + 1) % 4];
    c.edges.push_back(flexpoly::edge_key(1, a));
    c.edges.push_back(flexpoly::edge_key(6, a));
    c.edges.push_back(flexpoly::edge_key(a, b));
    c.faces.push_back({1, a, b});
    c.faces.push_back({6, b, a});
  }
  return c;
}

inline oracle::Q3 q3(long x, long y, long z) { return {x, y, z}; }

}  // namespace fixtures
