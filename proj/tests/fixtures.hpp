#pragma once

#include "toric/hypersurface.hpp"
#include "toric/mori_cone.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace toric;

// P^1 fibered over P^3: CWS 5 1 1 1 1 1 0  2 0 0 0 0 1 1
inline LatticePolytope p1_over_p3_cws()
{
    return cws_dual_polytope(parse_cws({5, 1, 1, 1, 1, 1, 0, 2, 0, 0, 0, 0, 1, 1}));
}

// the same polytope with a pinned point order
inline LatticePolytope p1_over_p3_matrix()
{
    IMat m(4, 7, {1, 0, 0, -1, 0,  0, 0,
                  0, 1, 0, -1, 0,  0, 0,
                  0, 0, 1, -1, 0,  0, 0,
                  0, 0, 0,  1, -1, 1, 0});
    return LatticePolytope::from_points(m, true);
}

// CWS 8 4 1 1 1 1 0  6 3 1 0 1 0 1 (one non-simplicial facet, 2 triangulations)
inline LatticePolytope deg86_cws()
{
    return cws_dual_polytope(parse_cws({8, 4, 1, 1, 1, 1, 0, 6, 3, 1, 0, 1, 0, 1}));
}

inline LatticePolytope deg86_matrix()
{
    IMat m(4, 8, {3,  1, 0, 0, 0, -1,  1, 0,
                  -1, 0, 1, 0, 0,  0,  0, 0,
                  3,  0, 0, 0, 1, -1,  1, 0,
                  -4, 0, 0, 1, 0,  1, -1, 0});
    return LatticePolytope::from_points(m, true);
}

inline LatticePolytope quintic()
{
    return cws_dual_polytope(parse_cws({5, 1, 1, 1, 1, 1}));
}

inline LatticePolytope p2()
{
    return cws_dual_polytope(parse_cws({3, 1, 1, 1}));
}

inline LatticePolytope p1xp1_matrix()
{
    IMat m(2, 4, {1, -1, 0, 0,
                  0, 0, 1, -1});
    return LatticePolytope::from_points(m, true);
}

inline std::string word_of(const LatticePolytope &p, const std::vector<int> &div_idx)
{
    std::string w(p.num_divisors(), '0');
    for (int i : div_idx)
        w[i] = '1';
    return w;
}

} // namespace fixtures
