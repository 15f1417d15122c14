#include "toric/lp.hpp"

#include <cassert>

namespace toric {

namespace {

// Dense tableau simplex with Bland's rule, exact rationals.
// Standard form: maximize c.x subject to A x = b, x >= 0, b >= 0.
// Returns the optimal value, or nullopt if unbounded.
class Simplex {
public:
    Simplex(std::vector<RVec> a, RVec b) : a_(std::move(a)), b_(std::move(b))
    {
        m_ = (int)a_.size();
        n_ = m_ ? (int)a_[0].size() : 0;
    }

    // Phase 1: find a basic feasible solution. Returns false if infeasible.
    bool phase1()
    {
        for (int i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto &v : a_[i])
                    v = -v;
                b_[i] = -b_[i];
            }
        // append artificial variables
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < m_; ++j)
                a_[i].push_back(i == j ? 1 : 0);
        }
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i)
            basis_[i] = n_ + i;
        RVec cost(n_ + m_, 0);
        for (int j = n_; j < n_ + m_; ++j)
            cost[j] = -1;
        optimize(cost);
        Rat val = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_)
                val += b_[i];
        if (val != 0)
            return false;
        // drive remaining artificials out of the basis
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_)
                continue;
            int enter = -1;
            for (int j = 0; j < n_; ++j)
                if (a_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter >= 0)
                pivot(i, enter);
            // else the row is redundant; harmless to keep the artificial at 0
        }
        for (auto &row : a_)
            row.resize(n_);
        return true;
    }

    // Phase 2 on the original variables. Returns nullopt if unbounded.
    std::optional<Rat> phase2(RVec cost)
    {
        assert((int)cost.size() == n_);
        if (!optimize(cost))
            return std::nullopt;
        Rat val = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_)
                val += cost[basis_[i]] * b_[i];
        return val;
    }

private:
    void pivot(int row, int col)
    {
        int w = (int)a_[row].size();
        Rat p = a_[row][col];
        for (int j = 0; j < w; ++j)
            a_[row][j] /= p;
        b_[row] /= p;
        for (int i = 0; i < m_; ++i) {
            if (i == row || a_[i][col] == 0)
                continue;
            Rat f = a_[i][col];
            for (int j = 0; j < w; ++j)
                a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
        }
        basis_[row] = col;
    }

    // returns false on unboundedness
    bool optimize(const RVec &cost)
    {
        int w = (int)cost.size();
        while (true) {
            // reduced costs; Bland: pick smallest entering index
            int enter = -1;
            for (int j = 0; j < w && enter < 0; ++j) {
                bool basic = false;
                for (int i = 0; i < m_; ++i)
                    if (basis_[i] == j)
                        basic = true;
                if (basic)
                    continue;
                Rat rc = cost[j];
                for (int i = 0; i < m_; ++i)
                    if (basis_[i] < w)
                        rc -= cost[basis_[i]] * a_[i][j];
                if (rc > 0)
                    enter = j;
            }
            if (enter < 0)
                return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0)
                    continue;
                Rat ratio = b_[i] / a_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0)
                return false;
            pivot(leave, enter);
        }
    }

    std::vector<RVec> a_;
    RVec b_;
    std::vector<int> basis_;
    int m_, n_;
};

} // namespace

bool in_nonneg_span(const std::vector<IVec> &rays, const IVec &target)
{
    if (rays.empty()) {
        for (const Int &t : target)
            if (t != 0)
                return false;
        return true;
    }
    int dim = (int)target.size();
    int k = (int)rays.size();
    std::vector<RVec> a(dim, RVec(k));
    RVec b(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < k; ++j)
            a[i][j] = Rat(rays[j][i]);
        b[i] = Rat(target[i]);
    }
    Simplex s(std::move(a), std::move(b));
    return s.phase1();
}

bool strictly_feasible(const StrictSystem &sys)
{
    int m = (int)sys.rows.size();
    if (m == 0)
        return true;
    int n = (int)sys.rows[0].size();
    // variables: x+ (n), x- (n), eps, slacks s_i (m), cap slack t
    // rows: a_i x+ - a_i x- - eps*strict_i - s_i = rhs_i;  eps + t = 1
    int nv = 2 * n + 1 + m + 1;
    std::vector<RVec> a(m + 1, RVec(nv, 0));
    RVec b(m + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = sys.rows[i][j];
            a[i][n + j] = -sys.rows[i][j];
        }
        if (sys.strict[i])
            a[i][2 * n] = -1;
        a[i][2 * n + 1 + i] = -1;
        b[i] = sys.rhs[i];
    }
    a[m][2 * n] = 1;
    a[m][nv - 1] = 1;
    b[m] = 1;
    Simplex s(std::move(a), std::move(b));
    if (!s.phase1())
        return false;
    RVec cost(nv, 0);
    cost[2 * n] = 1;
    auto v = s.phase2(cost);
    return v && *v > 0;
}

} // namespace toric
