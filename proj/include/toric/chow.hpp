#pragma once

#include "toric/triangulate.hpp"

#include <map>

namespace toric {

// Integral basis of the toric divisor class lattice. Indices refer to
// positions in divisor_points(); expansion[i] gives D_i in terms of the basis.
struct DivisorBasis {
    std::vector<int> basis;
    std::vector<IVec> expansion;
};

// Chooses basis divisors preferring high indices (this reproduces the
// published expansions for the worked examples). Throws if no subset of
// toric divisors is an integral basis (torsion or no unimodular complement).
DivisorBasis divisor_basis(const LatticePolytope &p);

// Same, for an explicitly pinned index set.
DivisorBasis divisor_basis_for(const LatticePolytope &p, const std::vector<int> &basis);

// Exact intersection numbers of the toric divisors on the triangulated
// ambient space; order equals the ambient dimension. Entries with distinct
// indices are 1/vol over simplices of the triangulation; repeated indices are
// determined by the linear relations among the divisors.
class IntersectionTensor {
public:
    static IntersectionTensor ambient(const LatticePolytope &p,
                                      const StarTriangulation &t);

    int order() const { return order_; }
    int num_divisors() const { return nd_; }

    // idx is any multi-index of size order(); sorted internally
    Rat value(std::vector<int> idx) const;

    const std::map<std::vector<int>, Rat> &entries() const { return entries_; }

private:
    int order_ = 0, nd_ = 0;
    std::map<std::vector<int>, Rat> entries_; // sorted multisets, nonzero only
};

} // namespace toric
