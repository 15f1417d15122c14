#include "toric/chow.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toric {

namespace {

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

// nd x nd matrix [relations^T | unit columns for the subset]; the subset is
// an integral basis of the class lattice iff det = +-1
bool unimodular_complement(const IMat &divs, const std::vector<int> &subset)
{
    int dim = divs.rows(), nd = divs.cols();
    IMat m(nd, nd);
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = divs.at(j, i);
    for (int a = 0; a < (int)subset.size(); ++a)
        m.at(subset[a], dim + a) = 1;
    Int d = det(m);
    return d == 1 || d == -1;
}

DivisorBasis expand_all(const IMat &divs, const std::vector<int> &subset)
{
    int dim = divs.rows(), nd = divs.cols();
    int h = (int)subset.size();
    IMat m(nd, nd);
    for (int i = 0; i < nd; ++i)
        for (int j = 0; j < dim; ++j)
            m.at(i, j) = divs.at(j, i);
    for (int a = 0; a < h; ++a)
        m.at(subset[a], dim + a) = 1;

    DivisorBasis b;
    b.basis = subset;
    for (int i = 0; i < nd; ++i) {
        IVec e(nd, Int(0));
        e[i] = 1;
        auto x = solve_square(m, e);
        if (!x)
            throw std::logic_error("basis matrix is singular");
        IVec c(h);
        for (int a = 0; a < h; ++a) {
            const Rat &v = (*x)[dim + a];
            if (denominator(v) != 1)
                throw std::logic_error("non-integral expansion in a unimodular basis");
            c[a] = numerator(v);
        }
        b.expansion.push_back(std::move(c));
    }
    return b;
}

} // namespace

DivisorBasis divisor_basis(const LatticePolytope &p)
{
    IMat divs = p.divisor_matrix();
    int nd = divs.cols();
    int h = nd - divs.rows();
    if (h <= 0)
        throw std::runtime_error("no independent divisor classes");

    std::vector<int> best;
    combinations(nd, h, [&](const std::vector<int> &subset) {
        if (!unimodular_complement(divs, subset))
            return;
        // prefer high indices: compare descending index sequences
        if (best.empty()) {
            best = subset;
            return;
        }
        for (int i = h - 1, j = h - 1; i >= 0; --i, --j)
            if (subset[i] != best[j]) {
                if (subset[i] > best[j])
                    best = subset;
                return;
            }
    });
    if (best.empty())
        throw std::runtime_error(
            "divisor class lattice has no basis of toric divisors (torsion?)");
    return expand_all(divs, best);
}

DivisorBasis divisor_basis_for(const LatticePolytope &p, const std::vector<int> &basis)
{
    IMat divs = p.divisor_matrix();
    if ((int)basis.size() != divs.cols() - divs.rows())
        throw std::runtime_error("pinned basis has the wrong size");
    if (!unimodular_complement(divs, basis))
        throw std::runtime_error("pinned divisor set is not an integral basis");
    return expand_all(divs, basis);
}

namespace {

// multisets of the given size over {0..n-1}, nondecreasing
void multisets(int n, int size, const std::function<void(const std::vector<int> &)> &f)
{
    std::vector<int> idx(size, 0);
    while (true) {
        f(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - 1)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
            idx[j] = idx[i];
    }
}

std::vector<int> support(const std::vector<int> &ms)
{
    std::vector<int> s(ms);
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Unique solution of an augmented system (each row: coefficients, rhs), or
// nullopt if underdetermined or inconsistent.
std::optional<RVec> gauss_solve(std::vector<RVec> rows, int ncols)
{
    int rank = 0;
    for (int c = 0; c < ncols && rank < (int)rows.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows[rank], rows[piv]);
        Rat inv = rows[rank][c];
        for (auto &v : rows[rank])
            v /= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            Rat f = rows[r][c];
            for (int cc = 0; cc <= ncols; ++cc)
                rows[r][cc] -= f * rows[rank][cc];
        }
        ++rank;
    }
    if (rank < ncols)
        return std::nullopt;
    for (int r = rank; r < (int)rows.size(); ++r)
        if (rows[r][ncols] != 0)
            return std::nullopt;
    RVec x(ncols);
    for (int r = 0; r < rank; ++r) {
        int lead = 0;
        while (rows[r][lead] == 0)
            ++lead;
        x[lead] = rows[r][ncols];
    }
    return x;
}

} // namespace

Rat IntersectionTensor::value(std::vector<int> idx) const
{
    std::sort(idx.begin(), idx.end());
    auto it = entries_.find(idx);
    return it == entries_.end() ? Rat(0) : it->second;
}

IntersectionTensor IntersectionTensor::ambient(const LatticePolytope &p,
                                               const StarTriangulation &t)
{
    int dim = p.dim();
    int nd = p.num_divisors();
    IMat divs = p.divisor_matrix();

    IntersectionTensor out;
    out.order_ = dim;
    out.nd_ = nd;

    std::map<int, int> div_index;
    for (int i = 0; i < nd; ++i)
        div_index[p.divisor_points()[i]] = i;

    // distinct tuples: 1/volume on the simplices of the triangulation
    std::vector<std::vector<int>> cones; // simplices as sorted divisor-index sets
    for (size_t s = 0; s < t.simplices.size(); ++s) {
        std::vector<int> key;
        for (int pt : t.simplices[s])
            key.push_back(div_index.at(pt));
        std::sort(key.begin(), key.end());
        out.entries_[key] = Rat(1) / Rat(t.simplex_volume(p, (int)s));
        cones.push_back(std::move(key));
    }

    // Entries whose support is not part of any cone vanish (the divisors do
    // not meet); only face-supported repeated entries are unknowns. Without
    // this the linear relations alone underdetermine the tensor.
    auto is_face = [&](const std::vector<int> &supp) {
        for (const auto &c : cones)
            if (std::includes(c.begin(), c.end(), supp.begin(), supp.end()))
                return true;
        return false;
    };

    // Entries with repeated indices are fixed by the linear relations.
    // First pass: small local systems per support set, from large supports
    // down. Falls back to one global solve when a local system is singular
    // (antipodal divisor points make that happen).
    bool staged_ok = true;
    for (int k = dim - 1; k >= 1 && staged_ok; --k) {
        combinations(nd, k, [&](const std::vector<int> &supp) {
            if (!staged_ok || !is_face(supp))
                return;
            // unknowns: multisets of size dim with support exactly supp
            std::vector<std::vector<int>> unknowns;
            multisets(k, dim, [&](const std::vector<int> &pat) {
                std::vector<int> ms;
                for (int x : pat)
                    ms.push_back(supp[x]);
                if (support(ms) == supp)
                    unknowns.push_back(ms);
            });
            if (unknowns.empty())
                return;
            std::map<std::vector<int>, int> pos;
            for (int i = 0; i < (int)unknowns.size(); ++i)
                pos[unknowns[i]] = i;

            std::vector<RVec> rows;
            multisets(k, dim - 1, [&](const std::vector<int> &pat) {
                std::vector<int> j;
                for (int x : pat)
                    j.push_back(supp[x]);
                if (support(j) != supp)
                    return;
                for (int m = 0; m < dim; ++m) {
                    RVec row(unknowns.size() + 1, Rat(0));
                    for (int i = 0; i < nd; ++i) {
                        Int c = divs.at(m, i);
                        if (c == 0)
                            continue;
                        std::vector<int> key = j;
                        key.push_back(i);
                        std::sort(key.begin(), key.end());
                        auto it = pos.find(key);
                        if (it != pos.end())
                            row[it->second] += Rat(c);
                        else
                            row.back() -= Rat(c) * out.value(key);
                    }
                    rows.push_back(std::move(row));
                }
            });

            auto x = gauss_solve(std::move(rows), (int)unknowns.size());
            if (!x) {
                staged_ok = false;
                return;
            }
            for (int i = 0; i < (int)unknowns.size(); ++i)
                if ((*x)[i] != 0)
                    out.entries_[unknowns[i]] = (*x)[i];
        });
    }

    if (!staged_ok) {
        // global system over every repeated-index entry at once
        std::vector<std::vector<int>> unknowns;
        multisets(nd, dim, [&](const std::vector<int> &ms) {
            if ((int)support(ms).size() < dim && is_face(support(ms)))
                unknowns.push_back(ms);
        });
        std::map<std::vector<int>, int> pos;
        for (int i = 0; i < (int)unknowns.size(); ++i)
            pos[unknowns[i]] = i;
        // drop anything the staged pass half-filled
        for (const auto &u : unknowns)
            out.entries_.erase(u);

        std::vector<RVec> rows;
        multisets(nd, dim - 1, [&](const std::vector<int> &j) {
            for (int m = 0; m < dim; ++m) {
                RVec row(unknowns.size() + 1, Rat(0));
                for (int i = 0; i < nd; ++i) {
                    Int c = divs.at(m, i);
                    if (c == 0)
                        continue;
                    std::vector<int> key = j;
                    key.push_back(i);
                    std::sort(key.begin(), key.end());
                    auto it = pos.find(key);
                    if (it != pos.end())
                        row[it->second] += Rat(c);
                    else
                        row.back() -= Rat(c) * out.value(key);
                }
                rows.push_back(std::move(row));
            }
        });
        auto x = gauss_solve(std::move(rows), (int)unknowns.size());
        if (!x)
            throw std::logic_error("intersection system is not uniquely solvable");
        for (int i = 0; i < (int)unknowns.size(); ++i)
            if ((*x)[i] != 0)
                out.entries_[unknowns[i]] = (*x)[i];
    }

    // verification: every relation annihilates the tensor
    for (int m = 0; m < dim; ++m) {
        multisets(nd, dim - 1, [&](const std::vector<int> &j) {
            Rat s = 0;
            for (int i = 0; i < nd; ++i) {
                if (divs.at(m, i) == 0)
                    continue;
                std::vector<int> key = j;
                key.push_back(i);
                s += Rat(divs.at(m, i)) * out.value(key);
            }
            if (s != 0)
                throw std::logic_error("intersection tensor fails a linear relation");
        });
    }
    return out;
}

} // namespace toric
