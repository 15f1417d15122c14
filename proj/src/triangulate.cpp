#include "toric/triangulate.hpp"
#include "toric/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

Int simplex_det(const LatticePolytope &p, const std::vector<int> &pts)
{
    int dim = p.dim();
    IMat m(dim, dim);
    for (int c = 0; c < dim; ++c)
        m.set_col(c, p.point(pts[c]));
    Int d = det(m);
    return d < 0 ? -d : d;
}

void combinations(int n, int k, const std::function<void(const std::vector<int> &)> &f)
{
    if (k > n)
        return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Do two full-dimensional simplices of a facet intersect in a common face?
// Equivalent to the existence of an affine functional vanishing on the shared
// vertices, strictly negative on the rest of a, strictly positive on the rest
// of b.
bool proper_intersection(const LatticePolytope &p, const std::vector<int> &a,
                         const std::vector<int> &b)
{
    int dim = p.dim();
    StrictSystem sys;
    auto add = [&](int pt, int sign, bool strict) {
        RVec row(dim + 1);
        IVec x = p.point(pt);
        for (int d = 0; d < dim; ++d)
            row[d] = Rat(sign * x[d]);
        row[dim] = sign;
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(0);
        sys.strict.push_back(strict);
    };
    for (int pt : a) {
        bool shared = std::find(b.begin(), b.end(), pt) != b.end();
        if (shared) {
            add(pt, 1, false);
            add(pt, -1, false);
        } else {
            add(pt, -1, true);
        }
    }
    for (int pt : b) {
        if (std::find(a.begin(), a.end(), pt) == a.end())
            add(pt, 1, true);
    }
    return strictly_feasible(sys);
}

// Is the candidate set of simplices induced by some height vector?
bool regular(const LatticePolytope &p, const std::vector<int> &facet_pts,
             const std::vector<std::vector<int>> &simplices)
{
    int dim = p.dim();
    int n = (int)facet_pts.size();
    std::map<int, int> local;
    for (int i = 0; i < n; ++i)
        local[facet_pts[i]] = i;

    StrictSystem sys;
    for (const auto &s : simplices) {
        IMat m(dim, dim);
        for (int c = 0; c < dim; ++c)
            m.set_col(c, p.point(s[c]));
        for (int pt : facet_pts) {
            if (std::find(s.begin(), s.end(), pt) != s.end())
                continue;
            auto lambda = solve_square(m, p.point(pt));
            if (!lambda)
                return false;
            RVec row(n, Rat(0));
            row[local[pt]] = 1;
            for (int c = 0; c < dim; ++c)
                row[local[s[c]]] -= (*lambda)[c];
            sys.rows.push_back(std::move(row));
            sys.rhs.push_back(0);
            sys.strict.push_back(true);
        }
    }
    return strictly_feasible(sys);
}

std::vector<std::vector<std::vector<int>>>
facet_subdivisions(const LatticePolytope &p, int facet_id, int cap)
{
    int dim = p.dim();
    const Facet &f = p.facets()[facet_id];
    std::vector<int> pts;
    for (int i : f.incident)
        if (p.kind(i) != PointKind::facet_interior)
            pts.push_back(i);

    if ((int)pts.size() == dim)
        return {{pts}};
    if ((int)pts.size() > cap)
        throw TriangulationCapError(
            "facet with " + std::to_string(pts.size()) +
            " points exceeds the subdivision cap; triangulation not completed");

    std::vector<std::vector<int>> cand;
    std::vector<Int> vol;
    combinations((int)pts.size(), dim, [&](const std::vector<int> &idx) {
        std::vector<int> s;
        for (int i : idx)
            s.push_back(pts[i]);
        Int v = simplex_det(p, s);
        if (v > 0) {
            cand.push_back(std::move(s));
            vol.push_back(v);
        }
    });

    int nc = (int)cand.size();
    std::vector<std::vector<bool>> compat(nc, std::vector<bool>(nc));
    for (int i = 0; i < nc; ++i)
        for (int j = i + 1; j < nc; ++j)
            compat[i][j] = compat[j][i] = proper_intersection(p, cand[i], cand[j]);

    Int target = facet_volume(p, facet_id);
    std::vector<Int> suffix(nc + 1, Int(0));
    for (int i = nc - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + vol[i];

    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> chosen;
    std::function<void(int, Int)> dfs = [&](int i, Int acc) {
        if (acc == target) {
            std::set<int> used;
            for (int c : chosen)
                used.insert(cand[c].begin(), cand[c].end());
            if ((int)used.size() != (int)pts.size())
                return; // not fine
            std::vector<std::vector<int>> tri;
            for (int c : chosen)
                tri.push_back(cand[c]);
            if (regular(p, pts, tri))
                out.push_back(std::move(tri));
            return;
        }
        if (i == nc || acc + suffix[i] < target)
            return;
        if (acc + vol[i] <= target) {
            bool ok = true;
            for (int c : chosen)
                if (!compat[c][i]) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(i);
                dfs(i + 1, acc + vol[i]);
                chosen.pop_back();
            }
        }
        dfs(i + 1, acc);
    };
    dfs(0, 0);
    return out;
}

} // namespace

Int StarTriangulation::simplex_volume(const LatticePolytope &p, int s) const
{
    return simplex_det(p, simplices[s]);
}

Int facet_volume(const LatticePolytope &p, int facet_id)
{
    const auto &faces = p.face_lattice();
    const Facet &f = p.facets()[facet_id];

    // locate the facet's own face record
    int top = -1;
    for (int i = 0; i < (int)faces.size(); ++i)
        if (faces[i].pts == f.incident) {
            top = i;
            break;
        }
    if (top < 0)
        throw std::logic_error("facet missing from the face lattice");

    auto verts = [&](const LatticePolytope::Face &fc) {
        std::vector<int> v;
        for (int pt : fc.pts)
            if (p.kind(pt) == PointKind::vertex)
                v.push_back(pt);
        return v;
    };

    // pulling triangulation using vertices only
    std::function<std::vector<std::vector<int>>(const LatticePolytope::Face &)> pull =
        [&](const LatticePolytope::Face &fc) -> std::vector<std::vector<int>> {
        auto vs = verts(fc);
        if (fc.dim == 0)
            return {{vs[0]}};
        int v0 = *std::min_element(vs.begin(), vs.end());
        std::vector<std::vector<int>> out;
        for (const auto &sub : faces) {
            if (sub.dim != fc.dim - 1)
                continue;
            if (!std::includes(fc.pts.begin(), fc.pts.end(), sub.pts.begin(),
                               sub.pts.end()))
                continue;
            if (std::find(sub.pts.begin(), sub.pts.end(), v0) != sub.pts.end())
                continue;
            for (auto s : pull(sub)) {
                s.push_back(v0);
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
        }
        return out;
    };

    Int vol = 0;
    for (const auto &s : pull(faces[top]))
        vol += simplex_det(p, s);
    return vol;
}

std::vector<StarTriangulation> star_triangulations(const LatticePolytope &p,
                                                   int max_facet_points)
{
    p.require_reflexive();
    int nf = (int)p.facets().size();

    std::vector<std::vector<std::vector<std::vector<int>>>> per_facet(nf);
    for (int f = 0; f < nf; ++f)
        per_facet[f] = facet_subdivisions(p, f, max_facet_points);

    // ridges between facet pairs, for the compatibility check
    struct Ridge {
        int f1, f2;
        std::vector<int> pts;
    };
    std::vector<Ridge> ridges;
    for (const auto &face : p.face_lattice())
        if (face.dim == p.dim() - 2 && face.facet_ids.size() == 2)
            ridges.push_back({face.facet_ids[0], face.facet_ids[1], face.pts});

    auto induced = [&](const std::vector<std::vector<int>> &tri,
                       const std::vector<int> &rpts) {
        std::set<std::vector<int>> cells;
        for (const auto &s : tri) {
            std::vector<int> common;
            for (int pt : s)
                if (std::binary_search(rpts.begin(), rpts.end(), pt))
                    common.push_back(pt);
            if ((int)common.size() == p.dim() - 1)
                cells.insert(common);
        }
        return cells;
    };

    std::vector<StarTriangulation> result;
    std::vector<int> choice(nf);
    std::function<void(int)> assemble = [&](int f) {
        if (f == nf) {
            StarTriangulation t;
            for (int g = 0; g < nf; ++g) {
                auto part = per_facet[g][choice[g]];
                std::sort(part.begin(), part.end(),
                          [&](const std::vector<int> &a, const std::vector<int> &b) {
                              return bitset_word(p, a) < bitset_word(p, b);
                          });
                for (auto &s : part) {
                    t.simplices.push_back(s);
                    t.facet_of.push_back(g);
                }
            }
            result.push_back(std::move(t));
            return;
        }
        for (int c = 0; c < (int)per_facet[f].size(); ++c) {
            choice[f] = c;
            bool ok = true;
            for (const auto &r : ridges) {
                int a = std::min(r.f1, r.f2), b = std::max(r.f1, r.f2);
                if (b != f || a > f)
                    continue;
                if (induced(per_facet[a][choice[a]], r.pts) !=
                    induced(per_facet[b][choice[b]], r.pts)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                assemble(f + 1);
        }
    };
    assemble(0);

    // simplicial facets first in the emitted simplex order
    for (auto &t : result) {
        std::vector<size_t> order(t.simplices.size());
        for (size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            bool sa = per_facet[t.facet_of[a]].size() == 1 &&
                      per_facet[t.facet_of[a]][0].size() == 1;
            bool sb = per_facet[t.facet_of[b]].size() == 1 &&
                      per_facet[t.facet_of[b]][0].size() == 1;
            if (sa != sb)
                return sa;
            return false;
        });
        StarTriangulation s;
        for (size_t i : order) {
            s.simplices.push_back(t.simplices[i]);
            s.facet_of.push_back(t.facet_of[i]);
        }
        t = std::move(s);
    }

    std::sort(result.begin(), result.end(),
              [&](const StarTriangulation &a, const StarTriangulation &b) {
                  auto key = [&](const StarTriangulation &t) {
                      std::vector<std::string> w;
                      for (const auto &s : t.simplices)
                          w.push_back(bitset_word(p, s));
                      std::sort(w.begin(), w.end());
                      return w;
                  };
                  return key(a) < key(b);
              });
    return result;
}

std::vector<std::vector<int>> stanley_reisner(const LatticePolytope &p,
                                              const StarTriangulation &t)
{
    int nd = p.num_divisors();
    std::map<int, int> div_index;
    for (int i = 0; i < nd; ++i)
        div_index[p.divisor_points()[i]] = i;

    std::vector<std::vector<int>> simp;
    for (const auto &s : t.simplices) {
        std::vector<int> d;
        for (int pt : s)
            d.push_back(div_index.at(pt));
        std::sort(d.begin(), d.end());
        simp.push_back(std::move(d));
    }

    auto is_face = [&](const std::vector<int> &s) {
        for (const auto &m : simp)
            if (std::includes(m.begin(), m.end(), s.begin(), s.end()))
                return true;
        return false;
    };

    std::vector<std::vector<int>> gens;
    for (int size = 1; size <= nd; ++size) {
        combinations(nd, size, [&](const std::vector<int> &s) {
            for (const auto &g : gens)
                if (std::includes(s.begin(), s.end(), g.begin(), g.end()))
                    return;
            if (!is_face(s))
                gens.push_back(s);
        });
    }

    auto word = [&](const std::vector<int> &g) {
        std::string w(nd, '0');
        for (int i : g)
            w[i] = '1';
        return w;
    };
    std::sort(gens.begin(), gens.end(),
              [&](const std::vector<int> &a, const std::vector<int> &b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return word(a) > word(b);
              });
    return gens;
}

std::string bitset_word(const LatticePolytope &p, const std::vector<int> &pts)
{
    std::string s(p.num_divisors(), '0');
    for (int i = 0; i < p.num_divisors(); ++i)
        if (std::find(pts.begin(), pts.end(), p.divisor_points()[i]) != pts.end())
            s[i] = '1';
    return s;
}

} // namespace toric
