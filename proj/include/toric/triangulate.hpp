#pragma once

#include "toric/polytope.hpp"

namespace toric {

struct TriangulationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fine star triangulation restricted to non-interior points: one set of
// dim-point simplices per boundary facet, coned over the origin.
struct StarTriangulation {
    // point indices into the parent polytope, each simplex sorted
    std::vector<std::vector<int>> simplices;
    // parallel: which facet (index into polytope facets) each simplex lies in
    std::vector<int> facet_of;

    Int simplex_volume(const LatticePolytope &p, int s) const;
};

// All fine regular star triangulations, compatible across facets, in a
// deterministic order. Facets with more than max_facet_points non-interior
// points abort with TriangulationCapError.
std::vector<StarTriangulation> star_triangulations(const LatticePolytope &p,
                                                   int max_facet_points = 16);

// Lattice volume of a boundary facet (sum over a pulling triangulation).
Int facet_volume(const LatticePolytope &p, int facet_id);

// Minimal non-faces of the triangulation, as sorted lists of divisor indices
// (positions within divisor_points()), deterministically ordered.
std::vector<std::vector<int>> stanley_reisner(const LatticePolytope &p,
                                              const StarTriangulation &t);

// Binary word over the divisor points for a set of point indices.
std::string bitset_word(const LatticePolytope &p, const std::vector<int> &pts);

} // namespace toric
