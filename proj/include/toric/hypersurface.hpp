#pragma once

#include "toric/chow.hpp"

namespace toric {

// H = sum c_i D_i over the divisor indices; all-ones is the anticanonical
// (Calabi-Yau) class.
struct HypersurfaceClass {
    IVec coeffs;
    bool is_cy() const
    {
        for (const Int &c : coeffs)
            if (c != 1)
                return false;
        return true;
    }
};

HypersurfaceClass cy_class(const LatticePolytope &p);
HypersurfaceClass hypersurface_class(const LatticePolytope &p, IVec coeffs);

// Degrees of H under the weight systems (the degree-sorted IP simplices).
IVec hypersurface_degrees(const LatticePolytope &p, const HypersurfaceClass &h);

// Triple intersections J_a J_b J_c H over the divisor basis.
class TripleTensor {
public:
    TripleTensor(const IntersectionTensor &t, const DivisorBasis &b,
                 const HypersurfaceClass &h);

    int rank() const { return rank_; }
    Rat value(std::vector<int> idx) const; // basis positions, any order

    // rendered like "2*J1^3+108*J2^3+8*J1^2*J2+30*J2^2*J1"
    std::string polynomial() const;

private:
    int rank_ = 0;
    std::map<std::vector<int>, Rat> entries_;
};

// "d1=J1, d2=-3*J1+J2, ..."
std::string divisor_class_string(const DivisorBasis &b);

// Characteristic classes of the hypersurface via adjunction.
struct ChernData {
    RVec c1_basis;                       // c1(H) over the divisor basis
    std::map<std::vector<int>, Rat> c2_basis; // quadratic form over the basis
    Rat euler;                           // integral of c3(H) over H
};
ChernData chern_classes(const LatticePolytope &p, const IntersectionTensor &t,
                        const DivisorBasis &b, const HypersurfaceClass &h);

struct BatyrevHodge {
    long h11 = 0, h21 = 0;
    long euler() const { return 2 * (h11 - h21); }
};
// Batyrev's point-count formulas over the face lattice of the dual pair;
// dim must be 4.
BatyrevHodge batyrev_hodge(const LatticePolytope &p_star);

struct GeneraReport {
    bool cy = false;
    long h11 = 0, h21 = 0; // CY case
    Rat chi0, chi1;        // non-CY case
    Rat euler;
};
GeneraReport hodge_or_genera(const LatticePolytope &p, const IntersectionTensor &t,
                             const HypersurfaceClass &h);

struct DivisorTopology {
    int divisor = 0; // divisor index
    Rat chi;         // integral of c2(S)
    Rat c1_sq;       // integral of c1(S)^2
    Rat chi0;        // (c1^2 + c2)/12
    int dp_type = -1;           // 0..8 when the numerical conditions match
    bool dp_candidate = false;  // numerical conditions + curve positivity
    bool isolated_dp = false;   // candidate meeting no other candidate
};
std::vector<DivisorTopology> divisor_topology(const LatticePolytope &p,
                                              const IntersectionTensor &t,
                                              const HypersurfaceClass &h);

} // namespace toric
