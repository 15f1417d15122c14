#include "toric/matrix.hpp"

#include <stdexcept>

namespace toric {

Int content(const IVec &v)
{
    Int g = 0;
    for (const Int &x : v)
        g = igcd(g, x);
    return g;
}

void make_primitive(IVec &v)
{
    Int g = content(v);
    if (g == 0)
        return;
    int lead = 0;
    while (lead < (int)v.size() && v[lead] == 0)
        ++lead;
    if (lead < (int)v.size() && v[lead] < 0)
        g = -g;
    for (Int &x : v)
        x /= g;
}

Int dot(const IVec &a, const IVec &b)
{
    assert(a.size() == b.size());
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::string rat_str(const Rat &r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

IMat::IMat(int rows, int cols, std::initializer_list<int> vals)
    : rows_(rows), cols_(cols), a_(rows * cols)
{
    assert((int)vals.size() == rows * cols);
    int i = 0;
    for (int v : vals)
        a_[i++] = v;
}

IVec IMat::row(int r) const
{
    IVec v(cols_);
    for (int c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

IVec IMat::col(int c) const
{
    IVec v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

void IMat::set_col(int c, const IVec &v)
{
    assert((int)v.size() == rows_);
    for (int r = 0; r < rows_; ++r)
        at(r, c) = v[r];
}

IMat IMat::transposed() const
{
    IMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

IVec mat_vec(const IMat &m, const IVec &x)
{
    assert((int)x.size() == m.cols());
    IVec y(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        Int s = 0;
        for (int c = 0; c < m.cols(); ++c)
            s += m.at(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

Int det(const IMat &m)
{
    assert(m.rows() == m.cols());
    int n = m.rows();
    // Bareiss fraction-free elimination
    IMat a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                return 0;
            for (int c = 0; c < n; ++c)
                std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

// Rational Gaussian elimination; returns rank, leaves reduced rows in place.
int eliminate(std::vector<RVec> &rows)
{
    if (rows.empty())
        return 0;
    int ncols = (int)rows[0].size();
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
        for (int j = c; j < ncols; ++j)
            rows[rank][j] /= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            Rat f = rows[r][c];
            for (int j = c; j < ncols; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int rank(const IMat &m)
{
    std::vector<RVec> rows(m.rows(), RVec(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            rows[r][c] = Rat(m.at(r, c));
    return eliminate(rows);
}

IMat kernel_lattice(const IMat &m)
{
    // Column HNF with a tracked unimodular transform: m * u = h with the
    // trailing columns of h zero; those columns of u span the kernel lattice.
    int nr = m.rows(), nc = m.cols();
    IMat h = m;
    IMat u(nc, nc);
    for (int i = 0; i < nc; ++i)
        u.at(i, i) = 1;

    auto swap_cols = [&](IMat &x, int a, int b) {
        for (int r = 0; r < x.rows(); ++r)
            std::swap(x.at(r, a), x.at(r, b));
    };
    auto addmul_col = [&](IMat &x, int dst, int src, const Int &f) {
        for (int r = 0; r < x.rows(); ++r)
            x.at(r, dst) += f * x.at(r, src);
    };

    int col = 0;
    for (int row = 0; row < nr && col < nc; ++row) {
        // clear entries right of position (row, col) by gcd steps
        while (true) {
            int p = -1;
            for (int c = col; c < nc; ++c)
                if (h.at(row, c) != 0) {
                    p = c;
                    break;
                }
            if (p < 0)
                break;
            if (p != col) {
                swap_cols(h, col, p);
                swap_cols(u, col, p);
            }
            bool clean = true;
            for (int c = col + 1; c < nc; ++c) {
                if (h.at(row, c) == 0)
                    continue;
                Int q = h.at(row, c) / h.at(row, col);
                addmul_col(h, c, col, -q);
                addmul_col(u, c, col, -q);
                if (h.at(row, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
            // remainder smaller than pivot exists; rotate it into pivot position
            int best = col;
            for (int c = col + 1; c < nc; ++c)
                if (h.at(row, c) != 0 &&
                    abs(h.at(row, c)) < abs(h.at(row, best)))
                    best = c;
            if (best != col) {
                swap_cols(h, col, best);
                swap_cols(u, col, best);
            }
        }
        if (h.at(row, col) != 0)
            ++col;
    }

    IMat ker(nc, nc - col);
    for (int c = col; c < nc; ++c)
        for (int r = 0; r < nc; ++r)
            ker.at(r, c - col) = u.at(r, c);
    return ker;
}

std::optional<RVec> solve_square(const IMat &m, const IVec &b)
{
    assert(m.rows() == m.cols() && (int)b.size() == m.rows());
    int n = m.rows();
    std::vector<RVec> rows(n, RVec(n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            rows[r][c] = Rat(m.at(r, c));
        rows[r][n] = Rat(b[r]);
    }
    int rk = eliminate(rows);
    if (rk < n)
        return std::nullopt;
    RVec x(n);
    for (int r = 0; r < n; ++r) {
        int lead = 0;
        while (lead < n && rows[r][lead] == 0)
            ++lead;
        if (lead == n) // pivot in the augmented column: inconsistent
            return std::nullopt;
        x[lead] = rows[r][n];
    }
    return x;
}

std::optional<IVec> kernel_line(const IMat &m)
{
    IMat k = kernel_lattice(m);
    if (k.cols() != 1)
        return std::nullopt;
    IVec v = k.col(0);
    make_primitive(v);
    return v;
}

int affine_rank(const IMat &pts, const std::vector<int> &idx)
{
    if (idx.empty())
        return -1;
    IMat d(pts.rows(), (int)idx.size() - 1);
    for (size_t j = 1; j < idx.size(); ++j)
        for (int r = 0; r < pts.rows(); ++r)
            d.at(r, (int)j - 1) = pts.at(r, idx[j]) - pts.at(r, idx[0]);
    return rank(d);
}

} // namespace toric
