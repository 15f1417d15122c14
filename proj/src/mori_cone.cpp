#include "toric/mori_cone.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

std::vector<Wall> walls(const LatticePolytope &p, const StarTriangulation &t)
{
    int dim = p.dim();
    int nd = p.num_divisors();
    std::map<int, int> div_index;
    for (int i = 0; i < nd; ++i)
        div_index[p.divisor_points()[i]] = i;

    std::vector<Wall> out;
    for (size_t a = 0; a < t.simplices.size(); ++a) {
        for (size_t b = a + 1; b < t.simplices.size(); ++b) {
            std::vector<int> shared;
            std::set_intersection(t.simplices[a].begin(), t.simplices[a].end(),
                                  t.simplices[b].begin(), t.simplices[b].end(),
                                  std::back_inserter(shared));
            if ((int)shared.size() != dim - 1)
                continue;

            int extra_a = -1, extra_b = -1;
            for (int pt : t.simplices[a])
                if (!std::binary_search(shared.begin(), shared.end(), pt))
                    extra_a = pt;
            for (int pt : t.simplices[b])
                if (!std::binary_search(shared.begin(), shared.end(), pt))
                    extra_b = pt;

            // unique primitive relation among the dim+1 involved rays
            std::vector<int> pts = {extra_a, extra_b};
            pts.insert(pts.end(), shared.begin(), shared.end());
            IMat m(dim, dim + 1);
            for (int c = 0; c < dim + 1; ++c)
                m.set_col(c, p.point(pts[c]));
            auto rel = kernel_line(m);
            if (!rel)
                throw std::logic_error("wall relation is not unique");
            if ((*rel)[0] < 0)
                for (Int &x : *rel)
                    x = -x;
            if ((*rel)[0] <= 0 || (*rel)[1] <= 0)
                throw std::logic_error("wall relation not positive on the opposite rays");

            Wall w;
            w.simplex_a = (int)a;
            w.simplex_b = (int)b;
            w.shared = shared;
            w.relation.assign(nd, Int(0));
            for (int c = 0; c < dim + 1; ++c)
                w.relation[div_index.at(pts[c])] += (*rel)[c];
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<IVec> mori_generators(const LatticePolytope &p,
                                  const std::vector<Wall> &ws)
{
    (void)p;
    std::vector<IVec> rays;
    for (const auto &w : ws) {
        IVec r = w.relation;
        Int g = content(r);
        if (g > 1) // keep the orientation fixed by the wall
            for (Int &x : r)
                x /= g;
        if (std::find(rays.begin(), rays.end(), r) == rays.end())
            rays.push_back(r);
    }

    // discard relations generated by the others
    for (size_t i = 0; i < rays.size();) {
        std::vector<IVec> others;
        for (size_t j = 0; j < rays.size(); ++j)
            if (j != i)
                others.push_back(rays[j]);
        if (in_nonneg_span(others, rays[i]))
            rays.erase(rays.begin() + i);
        else
            ++i;
    }

    std::sort(rays.begin(), rays.end(), [](const IVec &a, const IVec &b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return rays;
}

} // namespace toric
