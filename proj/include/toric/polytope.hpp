#pragma once

#include "toric/matrix.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotReflexiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeightSystem {
    Int degree;
    IVec weights;
};

// Combined weight system: one or more degree/weight rows over a shared set of
// coordinates. Degree must equal the weight sum in every row.
struct CWS {
    std::vector<WeightSystem> systems;
    int ncoords = 0;

    int dim() const { return ncoords - (int)systems.size(); }
};

// Splits a flat token list into weight systems. The block length is the
// unique divisor of the token count for which every block satisfies
// d = sum of weights.
CWS parse_cws(const IVec &tokens);

enum class PointKind { vertex, boundary, facet_interior, interior, origin };

struct Facet {
    IVec normal;  // primitive inner normal
    Int dist;     // <normal, x> >= -dist over the polytope, = -dist on facet
    std::vector<int> incident;
    bool simplicial = false;
};

class LatticePolytope {
public:
    // Convex hull of the given columns, completed to all lattice points.
    // With preserve_order the given nonzero points keep their input positions
    // (origin is moved last); otherwise a canonical order is produced:
    // vertices, other boundary points, facet-interior points, origin.
    static LatticePolytope from_points(const IMat &pts, bool preserve_order);

    int dim() const { return points_.rows(); }
    int num_points() const { return points_.cols(); }
    const IMat &points() const { return points_; }
    IVec point(int i) const { return points_.col(i); }
    PointKind kind(int i) const { return kind_[i]; }
    bool reflexive() const { return reflexive_; }
    void require_reflexive() const;

    const std::vector<Facet> &facets() const { return facets_; }

    // indices of non-interior nonzero points, in point order; these label the
    // toric divisors and the digits of all binary words
    const std::vector<int> &divisor_points() const { return div_points_; }
    int num_divisors() const { return (int)div_points_.size(); }
    // dim x num_divisors matrix of the divisor points
    IMat divisor_matrix() const;

    int facet_interior_count() const;
    int origin_index() const { return origin_; }

    // Proper faces as intersections of facets.
    struct Face {
        std::vector<int> pts;       // point indices on the face
        std::vector<int> facet_ids; // facets containing the face
        int dim = 0;
        std::vector<int> relint;    // points in the relative interior
    };
    const std::vector<Face> &face_lattice() const;

    // All lattice points of the polar dual {x : <p, x> >= -1 for all p}.
    // Only valid for reflexive polytopes.
    IMat dual_points() const;

private:
    IMat points_;
    std::vector<PointKind> kind_;
    std::vector<Facet> facets_;
    std::vector<int> div_points_;
    int origin_ = -1;
    bool reflexive_ = false;
    mutable std::vector<Face> faces_; // lazy
    mutable bool faces_done_ = false;
};

// P* for a CWS: rows of a kernel-lattice basis of the weight matrix give the
// bounding inequalities of P; their convex hull, completed, is the dual.
LatticePolytope cws_dual_polytope(const CWS &cws);

// One binary word per facet over the divisor points.
std::vector<std::string> incidence_words(const LatticePolytope &p);

struct IPSimplex {
    IVec coefficients; // over divisor points
    Int degree;
    int codim = 0;
};

// Minimal positive relations among the divisor points, sorted by descending
// degree.
std::vector<IPSimplex> ip_simplices(const LatticePolytope &p);

// Laurent-monomial serialization of the divisor points; pic < 0 omits the
// Pic field.
std::string kreuzer_polynomial(const LatticePolytope &p, long pic);

} // namespace toric
