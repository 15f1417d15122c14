#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

namespace {

void combinations(int n, int k, const std::function<void(const std::vector<int> &)> &f)
{
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return;
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

bool lex_greater(const IVec &a, const IVec &b)
{
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] > b[i];
    }
    return false;
}

} // namespace

CWS parse_cws(const IVec &tokens)
{
    int t = (int)tokens.size();
    if (t < 3)
        throw InputError("CWS input too short");

    std::vector<int> valid;
    for (int k = 1; k <= t / 3; ++k) {
        if (t % k != 0)
            continue;
        int block = t / k;
        int n = block - 1;
        if (n - k < 1)
            continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            Int d = tokens[j * block];
            Int sum = 0;
            bool pos = false;
            for (int i = 1; i < block; ++i) {
                Int w = tokens[j * block + i];
                if (w < 0)
                    ok = false;
                sum += w;
                if (w > 0)
                    pos = true;
            }
            if (d <= 0 || sum != d || !pos)
                ok = false;
        }
        if (ok)
            valid.push_back(k);
    }
    if (valid.empty())
        throw InputError("not a valid CWS: no split has degree = weight sum in every system");
    if (valid.size() > 1)
        throw InputError("ambiguous CWS: several splits satisfy the degree condition");

    int k = valid[0];
    int block = t / k;
    CWS cws;
    cws.ncoords = block - 1;
    for (int j = 0; j < k; ++j) {
        WeightSystem ws;
        ws.degree = tokens[j * block];
        for (int i = 1; i < block; ++i)
            ws.weights.push_back(tokens[j * block + i]);
        cws.systems.push_back(std::move(ws));
    }
    return cws;
}

LatticePolytope cws_dual_polytope(const CWS &cws)
{
    int k = (int)cws.systems.size();
    int n = cws.ncoords;
    IMat w(k, n);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            w.at(j, i) = cws.systems[j].weights[i];

    IMat ker = kernel_lattice(w);
    if (ker.cols() != cws.dim())
        throw InputError("weight systems are linearly dependent");

    // point i of P* is row i of the kernel basis
    IMat pts(cws.dim(), n);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < cws.dim(); ++d)
            pts.at(d, i) = ker.at(i, d);

    for (int i = 0; i < n; ++i) {
        IVec c = pts.col(i);
        if (content(c) == 0)
            throw InputError("degenerate CWS: a coordinate vanishes on the whole lattice");
        for (int j = 0; j < i; ++j)
            if (pts.col(j) == c)
                throw InputError("degenerate CWS: coincident polytope points");
    }
    return LatticePolytope::from_points(pts, false);
}

namespace {

struct HullFacet {
    IVec normal;
    Int dist;
};

// The origin lies in the strict interior iff no nonzero functional is
// non-negative on every point; it suffices to test the extreme rays of the
// polar cone, each spanned by dim-1 linearly independent points.
bool origin_interior(const IMat &pts)
{
    int dim = pts.rows();
    int np = pts.cols();
    bool bad = false;
    combinations(np, dim - 1, [&](const std::vector<int> &idx) {
        if (bad)
            return;
        IMat m(dim - 1, dim);
        for (int r = 0; r < dim - 1; ++r)
            for (int c = 0; c < dim; ++c)
                m.at(r, c) = pts.at(c, idx[r]);
        auto u = kernel_line(m);
        if (!u)
            return;
        bool nonneg = true, nonpos = true;
        for (int p = 0; p < np; ++p) {
            Int d = dot(*u, pts.col(p));
            if (d < 0)
                nonneg = false;
            if (d > 0)
                nonpos = false;
        }
        if (nonneg || nonpos)
            bad = true;
    });
    return !bad;
}

std::vector<HullFacet> hull_facets(const IMat &pts)
{
    int dim = pts.rows();
    int np = pts.cols();
    std::vector<HullFacet> out;
    std::set<std::pair<IVec, Int>> seen;

    combinations(np, dim, [&](const std::vector<int> &idx) {
        IMat m(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                m.at(r, c) = pts.at(c, idx[r]); // row r = point idx[r]
        IVec minus_one(dim, Int(-1));
        auto u = solve_square(m, minus_one);
        if (!u)
            return; // hyperplane through the origin or degenerate
        Int lcm = 1;
        for (const Rat &x : *u)
            lcm = lcm / igcd(lcm, denominator(x)) * denominator(x);
        IVec w(dim);
        for (int i = 0; i < dim; ++i)
            w[i] = numerator(Rat((*u)[i] * lcm));
        Int g = content(w);
        // <w, p> = -lcm on the subset; primitive normal has distance lcm/g
        if (lcm % g != 0)
            return; // cannot happen: g divides every value of w on lattice points
        Int c = lcm / g;
        for (Int &x : w)
            x /= g;
        if (c < 0) {
            c = -c;
            for (Int &x : w)
                x = -x;
        }
        for (int p = 0; p < np; ++p) {
            if (dot(w, pts.col(p)) < -c)
                return;
        }
        if (seen.insert({w, c}).second)
            out.push_back({std::move(w), c});
    });
    return out;
}

// all lattice points of the region cut out by the facet inequalities,
// within the bounding box of the given points
IMat complete_points(const IMat &pts, const std::vector<HullFacet> &facets)
{
    int dim = pts.rows();
    IVec lo(dim), hi(dim);
    for (int d = 0; d < dim; ++d) {
        lo[d] = hi[d] = pts.at(d, 0);
        for (int c = 1; c < pts.cols(); ++c) {
            lo[d] = std::min(lo[d], pts.at(d, c));
            hi[d] = std::max(hi[d], pts.at(d, c));
        }
    }
    std::vector<IVec> found;
    IVec x(dim);
    std::function<void(int)> scan = [&](int d) {
        if (d == dim) {
            for (const auto &f : facets)
                if (dot(f.normal, x) < -f.dist)
                    return;
            found.push_back(x);
            return;
        }
        for (Int v = lo[d]; v <= hi[d]; ++v) {
            x[d] = v;
            scan(d + 1);
        }
    };
    scan(0);
    IMat out(dim, (int)found.size());
    for (int c = 0; c < (int)found.size(); ++c)
        out.set_col(c, found[c]);
    return out;
}

} // namespace

LatticePolytope LatticePolytope::from_points(const IMat &pts, bool preserve_order)
{
    int dim = pts.rows();
    if (dim < 2 || dim > 4)
        throw InputError("supported polytope dimensions are 2..4");
    if (rank(pts) != dim)
        throw InputError("points do not span the full dimension");
    for (int i = 0; i < pts.cols(); ++i)
        for (int j = 0; j < i; ++j)
            if (pts.col(i) == pts.col(j))
                throw InputError("duplicate input point");

    if (!origin_interior(pts))
        throw InputError("origin is not in the strict interior of the polytope");

    auto hf = hull_facets(pts);

    IMat all = complete_points(pts, hf);

    // classification against the facets
    auto facet_set = [&](const IVec &x) {
        std::vector<int> fs;
        for (int f = 0; f < (int)hf.size(); ++f)
            if (dot(hf[f].normal, x) == -hf[f].dist)
                fs.push_back(f);
        return fs;
    };
    auto classify = [&](const IVec &x) {
        bool zero = content(x) == 0;
        if (zero)
            return PointKind::origin;
        auto fs = facet_set(x);
        if (fs.empty())
            return PointKind::interior;
        if (fs.size() == 1)
            return PointKind::facet_interior;
        IMat nm((int)fs.size(), dim);
        for (int i = 0; i < (int)fs.size(); ++i)
            for (int d = 0; d < dim; ++d)
                nm.at(i, d) = hf[fs[i]].normal[d];
        return rank(nm) == dim ? PointKind::vertex : PointKind::boundary;
    };

    // assemble the final point order
    std::vector<IVec> given;
    for (int c = 0; c < pts.cols(); ++c)
        given.push_back(pts.col(c));
    std::vector<IVec> extra;
    for (int c = 0; c < all.cols(); ++c) {
        IVec x = all.col(c);
        if (std::find(given.begin(), given.end(), x) == given.end())
            extra.push_back(x);
    }

    std::vector<IVec> ordered;
    if (preserve_order) {
        for (const auto &x : given)
            if (content(x) != 0)
                ordered.push_back(x);
        std::sort(extra.begin(), extra.end(), lex_greater);
        for (const auto &x : extra)
            if (content(x) != 0)
                ordered.push_back(x);
    } else {
        std::vector<IVec> nonzero;
        for (const auto &x : given)
            if (content(x) != 0)
                nonzero.push_back(x);
        for (const auto &x : extra)
            if (content(x) != 0)
                nonzero.push_back(x);
        auto group_rank = [&](const IVec &x) {
            switch (classify(x)) {
            case PointKind::vertex: return 0;
            case PointKind::boundary: return 1;
            case PointKind::facet_interior: return 2;
            default: return 3;
            }
        };
        std::sort(nonzero.begin(), nonzero.end(), [&](const IVec &a, const IVec &b) {
            int ra = group_rank(a), rb = group_rank(b);
            if (ra != rb)
                return ra < rb;
            return lex_greater(a, b);
        });
        ordered = std::move(nonzero);
    }
    ordered.push_back(IVec(dim, Int(0))); // origin last

    LatticePolytope p;
    p.points_ = IMat(dim, (int)ordered.size());
    for (int c = 0; c < (int)ordered.size(); ++c)
        p.points_.set_col(c, ordered[c]);
    p.origin_ = (int)ordered.size() - 1;

    p.kind_.resize(ordered.size());
    for (int c = 0; c < (int)ordered.size(); ++c)
        p.kind_[c] = classify(ordered[c]);

    for (int c = 0; c < (int)ordered.size(); ++c)
        if (p.kind_[c] != PointKind::facet_interior && p.kind_[c] != PointKind::origin &&
            p.kind_[c] != PointKind::interior)
            p.div_points_.push_back(c);

    p.facets_.resize(hf.size());
    for (size_t f = 0; f < hf.size(); ++f) {
        Facet fac;
        fac.normal = hf[f].normal;
        fac.dist = hf[f].dist;
        for (int c = 0; c < (int)ordered.size(); ++c)
            if (dot(fac.normal, ordered[c]) == -fac.dist)
                fac.incident.push_back(c);
        int non_interior = 0;
        for (int c : fac.incident)
            if (p.kind_[c] != PointKind::facet_interior)
                ++non_interior;
        fac.simplicial = non_interior == dim;
        p.facets_[f] = std::move(fac);
    }

    // deterministic facet order: by incidence word, descending
    auto word = [&](const Facet &f) {
        std::string s(p.div_points_.size(), '0');
        for (size_t i = 0; i < p.div_points_.size(); ++i)
            if (std::find(f.incident.begin(), f.incident.end(), p.div_points_[i]) !=
                f.incident.end())
                s[i] = '1';
        return s;
    };
    std::sort(p.facets_.begin(), p.facets_.end(),
              [&](const Facet &a, const Facet &b) { return word(a) > word(b); });

    p.reflexive_ = true;
    for (const auto &f : p.facets_)
        if (f.dist != 1)
            p.reflexive_ = false;

    return p;
}

void LatticePolytope::require_reflexive() const
{
    if (!reflexive_)
        throw NotReflexiveError("polytope is not reflexive (some facet has lattice distance > 1)");
}

IMat LatticePolytope::divisor_matrix() const
{
    IMat m(dim(), num_divisors());
    for (int i = 0; i < num_divisors(); ++i)
        m.set_col(i, point(div_points_[i]));
    return m;
}

int LatticePolytope::facet_interior_count() const
{
    int n = 0;
    for (auto k : kind_)
        if (k == PointKind::facet_interior)
            ++n;
    return n;
}

const std::vector<LatticePolytope::Face> &LatticePolytope::face_lattice() const
{
    if (faces_done_)
        return faces_;

    std::set<std::vector<int>> sets;
    for (const auto &f : facets_)
        sets.insert(f.incident);
    // closure under intersection
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sets.begin(), sets.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> is;
                std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(),
                                      cur[j].end(), std::back_inserter(is));
                if (!is.empty() && sets.insert(is).second)
                    grew = true;
            }
    }

    auto point_facets = [&](int pt) {
        std::vector<int> fs;
        for (int f = 0; f < (int)facets_.size(); ++f)
            if (std::find(facets_[f].incident.begin(), facets_[f].incident.end(), pt) !=
                facets_[f].incident.end())
                fs.push_back(f);
        return fs;
    };

    for (const auto &s : sets) {
        Face face;
        face.pts = s;
        face.dim = affine_rank(points_, s);
        for (int f = 0; f < (int)facets_.size(); ++f) {
            bool all = true;
            for (int pt : s)
                if (std::find(facets_[f].incident.begin(), facets_[f].incident.end(), pt) ==
                    facets_[f].incident.end()) {
                    all = false;
                    break;
                }
            if (all)
                face.facet_ids.push_back(f);
        }
        for (int pt : s)
            if (point_facets(pt) == face.facet_ids)
                face.relint.push_back(pt);
        faces_.push_back(std::move(face));
    }
    faces_done_ = true;
    return faces_;
}

IMat LatticePolytope::dual_points() const
{
    require_reflexive();
    std::vector<IVec> verts;
    for (int c = 0; c < num_points(); ++c)
        if (kind_[c] == PointKind::vertex)
            verts.push_back(point(c));

    IVec lo(dim()), hi(dim());
    for (const auto &f : facets_)
        for (int d = 0; d < dim(); ++d) {
            lo[d] = std::min(lo[d], f.normal[d]);
            hi[d] = std::max(hi[d], f.normal[d]);
        }
    std::vector<IVec> found;
    IVec x(dim());
    std::function<void(int)> scan = [&](int d) {
        if (d == dim()) {
            for (const auto &v : verts)
                if (dot(v, x) < -1)
                    return;
            found.push_back(x);
            return;
        }
        for (Int v = lo[d]; v <= hi[d]; ++v) {
            x[d] = v;
            scan(d + 1);
        }
    };
    scan(0);
    IMat out(dim(), (int)found.size());
    for (int c = 0; c < (int)found.size(); ++c)
        out.set_col(c, found[c]);
    return out;
}

std::vector<std::string> incidence_words(const LatticePolytope &p)
{
    std::vector<std::string> words;
    for (const auto &f : p.facets()) {
        std::string s(p.num_divisors(), '0');
        for (int i = 0; i < p.num_divisors(); ++i)
            if (std::find(f.incident.begin(), f.incident.end(), p.divisor_points()[i]) !=
                f.incident.end())
                s[i] = '1';
        words.push_back(std::move(s));
    }
    return words;
}

std::vector<IPSimplex> ip_simplices(const LatticePolytope &p)
{
    int nd = p.num_divisors();
    int dim = p.dim();
    IMat v = p.divisor_matrix();

    std::vector<IPSimplex> out;
    for (int size = 2; size <= dim + 1 && size <= nd; ++size) {
        combinations(nd, size, [&](const std::vector<int> &idx) {
            IMat sub(dim, size);
            for (int c = 0; c < size; ++c)
                sub.set_col(c, v.col(idx[c]));
            auto gen = kernel_line(sub);
            if (!gen)
                return;
            bool pos = true, neg = true;
            for (const Int &x : *gen) {
                if (x <= 0)
                    pos = false;
                if (x >= 0)
                    neg = false;
            }
            if (!pos && !neg)
                return;
            IPSimplex s;
            s.coefficients.assign(nd, Int(0));
            s.degree = 0;
            for (int c = 0; c < size; ++c) {
                Int coef = pos ? (*gen)[c] : -(*gen)[c];
                s.coefficients[idx[c]] = coef;
                s.degree += coef;
            }
            s.codim = dim - (size - 1);
            out.push_back(std::move(s));
        });
    }
    std::sort(out.begin(), out.end(), [](const IPSimplex &a, const IPSimplex &b) {
        if (a.degree != b.degree)
            return a.degree > b.degree;
        return lex_greater(a.coefficients, b.coefficients);
    });
    return out;
}

std::string kreuzer_polynomial(const LatticePolytope &p, long pic)
{
    std::string s = "KreuzerPoly=";
    bool first = true;
    for (int i : p.divisor_points()) {
        IVec x = p.point(i);
        std::string num, den;
        for (int d = 0; d < p.dim(); ++d) {
            if (x[d] == 0)
                continue;
            std::string var = "t_" + std::to_string(d + 1);
            Int e = abs(x[d]);
            if (e != 1)
                var += "^" + e.str();
            (x[d] > 0 ? num : den) += var;
        }
        std::string mono = num.empty() ? "1" : num;
        if (!den.empty())
            mono += "/(" + den + ")";
        if (p.kind(i) == PointKind::vertex)
            s += first ? mono : "+" + mono;
        else
            s += "-" + mono;
        first = false;
    }
    s += "; intpts=" + std::to_string(p.facet_interior_count()) + ";";
    if (pic >= 0)
        s += "  Pic=" + std::to_string(pic);
    return s;
}

} // namespace toric
