#pragma once

// Exact Gauss-Jordan elimination over a field of exact scalars.  Pivots are
// chosen by lowest complexity() to limit expression swell.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qschur/eigen.hpp"

namespace qschur {

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

template <class Scalar>
struct Echelon {
    Mat<Scalar> reduced;      // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

template <class Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
    Echelon<Scalar> out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index best = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (m(i, col).is_zero()) continue;
            if (best < 0 || m(i, col).complexity() < m(best, col).complexity()) best = i;
        }
        if (best < 0) continue;
        if (best != row) m.row(best).swap(m.row(row));
        const Scalar inv = m(row, col).inverse();
        for (Eigen::Index j = col; j < cols; ++j)
            if (!m(row, j).is_zero()) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar f = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <class Scalar>
int rank(const Mat<Scalar>& m) {
    return rref(m).rank();
}

/// Columns form a basis of the right kernel.
template <class Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& m) {
    Echelon<Scalar> e = rref(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index j = 0; j < cols; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free.push_back(j);
    Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Eigen::Index f = free[k];
        basis(f, static_cast<Eigen::Index>(k)) = Scalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], static_cast<Eigen::Index>(k)) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

/// Some x with a x = b, or nullopt if the system is inconsistent.
template <class Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> aug(a.rows(), a.cols() + b.cols());
    aug << a, b;
    Echelon<Scalar> e = rref(std::move(aug));
    Mat<Scalar> x = Mat<Scalar>::Zero(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const int p = e.pivots[r];
        if (p >= a.cols()) return std::nullopt;
        x.row(p) = e.reduced.block(static_cast<Eigen::Index>(r), a.cols(), 1, b.cols());
    }
    return x;
}

template <class Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
    if (a.rows() != a.cols()) throw SingularMatrix("inverse of a non-square matrix");
    Mat<Scalar> aug(a.rows(), 2 * a.cols());
    aug << a, Mat<Scalar>::Identity(a.rows(), a.cols());
    Echelon<Scalar> e = rref(std::move(aug));
    if (e.rank() < a.rows() || e.pivots.back() >= a.cols()) throw SingularMatrix("matrix is singular");
    return e.reduced.rightCols(a.cols());
}

}  // namespace qschur
