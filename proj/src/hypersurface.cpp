#include "toric/hypersurface.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

HypersurfaceClass cy_class(const LatticePolytope &p)
{
    return {IVec(p.num_divisors(), Int(1))};
}

HypersurfaceClass hypersurface_class(const LatticePolytope &p, IVec coeffs)
{
    if ((int)coeffs.size() != p.num_divisors())
        throw InputError("hypersurface class needs one coefficient per toric divisor");
    return {std::move(coeffs)};
}

IVec hypersurface_degrees(const LatticePolytope &p, const HypersurfaceClass &h)
{
    IVec out;
    for (const auto &s : ip_simplices(p)) {
        Int d = 0;
        for (int i = 0; i < p.num_divisors(); ++i)
            d += h.coeffs[i] * s.coefficients[i];
        out.push_back(d);
    }
    return out;
}

namespace {

RVec rat_vec(const IVec &v)
{
    RVec out;
    for (const Int &x : v)
        out.push_back(Rat(x));
    return out;
}

RVec unit_vec(int n, int i)
{
    RVec out(n, Rat(0));
    out[i] = 1;
    return out;
}

// integral of the product of four divisor-linear forms
Rat quad(const IntersectionTensor &t, const RVec &a, const RVec &b, const RVec &c,
         const RVec &d)
{
    int nd = t.num_divisors();
    Rat s = 0;
    for (int i = 0; i < nd; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < nd; ++j) {
            if (b[j] == 0)
                continue;
            for (int k = 0; k < nd; ++k) {
                if (c[k] == 0)
                    continue;
                for (int l = 0; l < nd; ++l) {
                    if (d[l] == 0)
                        continue;
                    Rat v = t.value({i, j, k, l});
                    if (v != 0)
                        s += a[i] * b[j] * c[k] * d[l] * v;
                }
            }
        }
    }
    return s;
}

// integral of S2 * x * y, with S2 the second elementary symmetric function of
// the toric divisors
Rat s2_mixed(const IntersectionTensor &t, const RVec &x, const RVec &y)
{
    int nd = t.num_divisors();
    Rat s = 0;
    for (int i = 0; i < nd; ++i)
        for (int j = i + 1; j < nd; ++j)
            s += quad(t, unit_vec(nd, i), unit_vec(nd, j), x, y);
    return s;
}

Rat s3_mixed(const IntersectionTensor &t, const RVec &x)
{
    int nd = t.num_divisors();
    Rat s = 0;
    for (int i = 0; i < nd; ++i)
        for (int j = i + 1; j < nd; ++j)
            for (int k = j + 1; k < nd; ++k)
                s += quad(t, unit_vec(nd, i), unit_vec(nd, j), unit_vec(nd, k), x);
    return s;
}

Rat euler_from_c3(const IntersectionTensor &t, const RVec &hv)
{
    int nd = t.num_divisors();
    RVec ones(nd, Rat(1));
    // c3(H)*H with c3 = S3 - S2*H + S1*H^2 - H^3
    return s3_mixed(t, hv) - s2_mixed(t, hv, hv) + quad(t, ones, hv, hv, hv) -
           quad(t, hv, hv, hv, hv);
}

std::string rat_term(const Rat &c)
{
    if (denominator(c) == 1)
        return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

} // namespace

TripleTensor::TripleTensor(const IntersectionTensor &t, const DivisorBasis &b,
                           const HypersurfaceClass &h)
{
    rank_ = (int)b.basis.size();
    int nd = t.num_divisors();
    for (int a = 0; a < rank_; ++a)
        for (int bb = a; bb < rank_; ++bb)
            for (int c = bb; c < rank_; ++c) {
                Rat v = 0;
                for (int l = 0; l < nd; ++l)
                    if (h.coeffs[l] != 0)
                        v += Rat(h.coeffs[l]) *
                             t.value({b.basis[a], b.basis[bb], b.basis[c], l});
                if (v != 0)
                    entries_[{a, bb, c}] = v;
            }
}

Rat TripleTensor::value(std::vector<int> idx) const
{
    std::sort(idx.begin(), idx.end());
    auto it = entries_.find(idx);
    return it == entries_.end() ? Rat(0) : it->second;
}

std::string TripleTensor::polynomial() const
{
    // pure powers first, then mixed monomials; coefficient of a monomial is
    // the symmetric sum over all orderings of its index multiset
    std::vector<std::vector<int>> keys;
    for (const auto &[k, v] : entries_)
        keys.push_back(k);
    auto distinct = [](const std::vector<int> &k) {
        std::vector<int> d(k);
        d.erase(std::unique(d.begin(), d.end()), d.end());
        return d;
    };
    std::sort(keys.begin(), keys.end(),
              [&](const std::vector<int> &a, const std::vector<int> &b) {
                  size_t da = distinct(a).size(), db = distinct(b).size();
                  if (da != db)
                      return da < db;
                  return a < b;
              });

    std::string s;
    for (const auto &k : keys) {
        // the printed coefficient is the triple intersection number itself
        Rat coef = entries_.at(k);
        std::string term;
        // exponent per distinct index, higher exponent written first
        std::vector<std::pair<int, int>> powers; // (index, exponent)
        for (int x : k) {
            if (!powers.empty() && powers.back().first == x)
                ++powers.back().second;
            else
                powers.push_back({x, 1});
        }
        std::stable_sort(powers.begin(), powers.end(),
                         [](const auto &a, const auto &b) { return a.second > b.second; });
        for (const auto &[idx, e] : powers) {
            if (!term.empty())
                term += "*";
            term += "J" + std::to_string(idx + 1);
            if (e > 1)
                term += "^" + std::to_string(e);
        }
        if (coef == -1)
            term = "-" + term;
        else if (coef != 1)
            term = rat_term(coef) + "*" + term;

        if (!s.empty() && term[0] != '-')
            s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

std::string divisor_class_string(const DivisorBasis &b)
{
    std::string s;
    for (size_t i = 0; i < b.expansion.size(); ++i) {
        if (i)
            s += ", ";
        s += "d" + std::to_string(i + 1) + "=";
        std::string rhs;
        for (size_t a = 0; a < b.basis.size(); ++a) {
            const Int &c = b.expansion[i][a];
            if (c == 0)
                continue;
            std::string term = "J" + std::to_string(a + 1);
            if (c == -1)
                term = "-" + term;
            else if (c != 1)
                term = c.str() + "*" + term;
            if (!rhs.empty() && term[0] != '-')
                rhs += "+";
            rhs += term;
        }
        s += rhs.empty() ? "0" : rhs;
    }
    return s;
}

ChernData chern_classes(const LatticePolytope &p, const IntersectionTensor &t,
                        const DivisorBasis &b, const HypersurfaceClass &h)
{
    int nd = t.num_divisors();
    int hr = (int)b.basis.size();
    RVec hv = rat_vec(h.coeffs);

    ChernData out;
    // c1 = sum D_i - H
    out.c1_basis.assign(hr, Rat(0));
    for (int i = 0; i < nd; ++i)
        for (int a = 0; a < hr; ++a)
            out.c1_basis[a] += Rat((Int(1) - h.coeffs[i]) * b.expansion[i][a]);

    // c2 = S2 - S1*H + H^2, expanded through D_i = sum_a E_ia J_a
    std::vector<RVec> e; // divisor expansions as rationals
    for (int i = 0; i < nd; ++i)
        e.push_back(rat_vec(b.expansion[i]));
    RVec s1(hr, Rat(0)), hh(hr, Rat(0));
    for (int i = 0; i < nd; ++i)
        for (int a = 0; a < hr; ++a) {
            s1[a] += e[i][a];
            hh[a] += Rat(h.coeffs[i]) * e[i][a];
        }
    // accumulate coefficients so that q[a][c] + q[c][a] (a<c) and q[a][a]
    // give the polynomial coefficients of J_a*J_c and J_a^2
    std::vector<RVec> q(hr, RVec(hr, Rat(0)));
    auto add_sym = [&](const RVec &x, const RVec &y, int sign) {
        for (int a = 0; a < hr; ++a)
            for (int c = 0; c < hr; ++c)
                q[a][c] += Rat(sign) * x[a] * y[c];
    };
    for (int i = 0; i < nd; ++i)
        for (int j = i + 1; j < nd; ++j) {
            for (int a = 0; a < hr; ++a)
                for (int c = 0; c < hr; ++c)
                    q[a][c] += e[i][a] * e[j][c] / 2 + e[j][a] * e[i][c] / 2;
        }
    add_sym(s1, hh, -1); // halves of the symmetrization cancel pairwise below
    add_sym(hh, hh, 1);
    for (int a = 0; a < hr; ++a)
        for (int c = a; c < hr; ++c) {
            Rat coef = a == c ? q[a][a] : (q[a][c] + q[c][a]);
            if (coef != 0)
                out.c2_basis[{a, c}] = coef;
        }

    (void)p;
    out.euler = euler_from_c3(t, hv);
    return out;
}

BatyrevHodge batyrev_hodge(const LatticePolytope &p_star)
{
    if (p_star.dim() != 4)
        throw std::runtime_error("Hodge number formulas require a 4-dimensional polytope");
    p_star.require_reflexive();

    const auto &faces = p_star.face_lattice();
    IMat dp = p_star.dual_points();

    // number of dual lattice points in the relative interior of the dual of
    // each face, keyed by the face's point set
    std::map<std::vector<int>, long> dual_count;
    for (int c = 0; c < dp.cols(); ++c) {
        IVec x = dp.col(c);
        std::vector<int> on;
        for (int i = 0; i < p_star.num_points(); ++i)
            if (dot(p_star.point(i), x) == -1)
                on.push_back(i);
        if (on.empty())
            continue; // interior point of the dual
        ++dual_count[on];
    }

    long lp_star = p_star.num_points();
    long lp = dp.cols();

    long h11 = lp_star - 5;
    long h21 = lp - 5;
    for (const auto &f : faces) {
        auto it = dual_count.find(f.pts);
        long cnt = it == dual_count.end() ? 0 : it->second;
        switch (f.dim) {
        case 3:
            h11 -= (long)f.relint.size();
            break;
        case 2:
            h11 += (long)f.relint.size() * cnt;
            break;
        case 1:
            h21 += cnt * (long)f.relint.size();
            break;
        case 0:
            h21 -= cnt;
            break;
        }
    }
    return {h11, h21};
}

GeneraReport hodge_or_genera(const LatticePolytope &p, const IntersectionTensor &t,
                             const HypersurfaceClass &h)
{
    RVec hv = rat_vec(h.coeffs);
    GeneraReport r;
    r.cy = h.is_cy();
    r.euler = euler_from_c3(t, hv);
    if (r.cy) {
        BatyrevHodge bh = batyrev_hodge(p);
        r.h11 = bh.h11;
        r.h21 = bh.h21;
        if (Rat(bh.euler()) != r.euler)
            throw std::logic_error("Euler number from c3 disagrees with the point counts");
        r.chi0 = 0;
        r.chi1 = -r.euler / 2;
    } else {
        int nd = t.num_divisors();
        RVec ones(nd, Rat(1));
        RVec c1(nd);
        for (int i = 0; i < nd; ++i)
            c1[i] = 1 - hv[i];
        // c1*c2*H with c2 = S2 - S1*H + H^2
        Rat c1c2h = s2_mixed(t, c1, hv);
        for (int i = 0; i < nd; ++i) {
            if (c1[i] == 0)
                continue;
            RVec ei = unit_vec(nd, i);
            c1c2h += c1[i] * (-quad(t, ones, hv, ei, hv) + quad(t, hv, hv, ei, hv));
        }
        r.chi0 = c1c2h / 24;
        r.chi1 = r.chi0 - r.euler / 2;
    }
    return r;
}

std::vector<DivisorTopology> divisor_topology(const LatticePolytope &p,
                                              const IntersectionTensor &t,
                                              const HypersurfaceClass &h)
{
    (void)p;
    int nd = t.num_divisors();
    RVec hv = rat_vec(h.coeffs);
    RVec ones(nd, Rat(1));

    std::vector<DivisorTopology> out(nd);
    for (int s = 0; s < nd; ++s) {
        DivisorTopology &d = out[s];
        d.divisor = s;
        RVec es = unit_vec(nd, s);
        RVec c1(nd); // c1(S) = S1 - D_s - H
        for (int i = 0; i < nd; ++i)
            c1[i] = ones[i] - es[i] - hv[i];
        RVec sh(nd); // D_s + H
        for (int i = 0; i < nd; ++i)
            sh[i] = es[i] + hv[i];

        // c2(S) = S2 - S1*(D_s+H) + D_s^2 + D_s*H + H^2
        d.chi = s2_mixed(t, es, hv) - quad(t, ones, sh, es, hv) +
                quad(t, es, es, es, hv) + quad(t, es, hv, es, hv) +
                quad(t, hv, hv, es, hv);
        d.c1_sq = quad(t, c1, c1, es, hv);
        d.chi0 = (d.c1_sq + d.chi) / 12;

        if (d.chi0 == 1 && denominator(d.c1_sq) == 1 && d.c1_sq >= 1 && d.c1_sq <= 9) {
            Int n = 9 - numerator(d.c1_sq);
            if (d.chi == Rat(n + 3)) {
                d.dp_type = (int)n.convert_to<long>();
                // Fano condition on every toric curve of S
                bool pos = true;
                for (int j = 0; j < nd && pos; ++j) {
                    if (j == s)
                        continue;
                    RVec ej = unit_vec(nd, j);
                    bool meets = false;
                    for (int k = 0; k < nd && !meets; ++k)
                        if (quad(t, ej, es, unit_vec(nd, k), hv) != 0)
                            meets = true;
                    if (meets && quad(t, ej, es, c1, hv) <= 0)
                        pos = false;
                }
                d.dp_candidate = pos;
            }
        }
    }

    for (int s = 0; s < nd; ++s) {
        if (!out[s].dp_candidate)
            continue;
        bool meets_other = false;
        for (int j = 0; j < nd && !meets_other; ++j) {
            if (j == s || !out[j].dp_candidate)
                continue;
            for (int k = 0; k < nd && !meets_other; ++k)
                if (quad(t, unit_vec(nd, j), unit_vec(nd, s), unit_vec(nd, k), hv) != 0)
                    meets_other = true;
        }
        out[s].isolated_dp = !meets_other;
    }
    return out;
}

} // namespace toric
