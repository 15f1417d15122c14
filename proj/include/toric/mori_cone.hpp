#pragma once

#include "toric/triangulate.hpp"

namespace toric {

// A codimension-one wall between two adjacent maximal cones of the fan,
// with the unique primitive relation among their rays.
struct Wall {
    int simplex_a = 0, simplex_b = 0; // indices into the triangulation
    std::vector<int> shared;          // point indices of the common facet
    IVec relation;                    // over divisor indices, positive on the
                                      // two non-shared rays
};

std::vector<Wall> walls(const LatticePolytope &p, const StarTriangulation &t);

// Extremal rays of the cone spanned by the wall relations: primitive integer
// vectors over the divisor indices, lexicographically sorted. Each entry is
// the intersection vector of a Mori generator with the toric divisors.
std::vector<IVec> mori_generators(const LatticePolytope &p,
                                  const std::vector<Wall> &walls);

} // namespace toric
