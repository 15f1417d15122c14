#pragma once

#include "toric/numeric.hpp"

#include <cassert>
#include <initializer_list>
#include <optional>

namespace toric {

// Dense integer matrix, row major.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IMat(int rows, int cols, std::initializer_list<int> vals);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int &at(int r, int c) { return a_[r * cols_ + c]; }
    const Int &at(int r, int c) const { return a_[r * cols_ + c]; }

    IVec row(int r) const;
    IVec col(int c) const;
    void set_col(int c, const IVec &v);

    IMat transposed() const;

    bool operator==(const IMat &other) const = default;

private:
    int rows_ = 0, cols_ = 0;
    IVec a_;
};

IVec mat_vec(const IMat &m, const IVec &x);

Int det(const IMat &m); // square only

int rank(const IMat &m);

// Basis of the lattice {x in Z^n : m x = 0}; columns of the result.
IMat kernel_lattice(const IMat &m);

// Unique rational solution of m x = b when m is square nonsingular.
std::optional<RVec> solve_square(const IMat &m, const IVec &b);

// One-dimensional integer kernel: the primitive generator, if rank deficiency
// is exactly one.
std::optional<IVec> kernel_line(const IMat &m);

// Rank of the set of points as an affine configuration (dimension of the
// affine span). Points are the columns of m.
int affine_rank(const IMat &pts, const std::vector<int> &idx);

} // namespace toric
