#pragma once

// Eigen integration for the exact scalar types.

#include <Eigen/Core>

#include "qschur/laurent.hpp"
#include "qschur/rational_function.hpp"

namespace Eigen {

template <>
struct NumTraits<qschur::Laurent> : GenericNumTraits<qschur::Laurent> {
    using Real = qschur::Laurent;
    using NonInteger = qschur::Laurent;
    using Literal = qschur::Laurent;
    using Nested = qschur::Laurent;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qschur::RationalFunction> : GenericNumTraits<qschur::RationalFunction> {
    using Real = qschur::RationalFunction;
    using NonInteger = qschur::RationalFunction;
    using Literal = qschur::RationalFunction;
    using Nested = qschur::RationalFunction;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 32,
        MulCost = 128
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace qschur {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatRF = Mat<RationalFunction>;
using VecRF = Vec<RationalFunction>;

/// Exact zero test (Eigen's isZero() is tolerance based).
template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// Exact structural equality, shapes included.
template <class DA, class DB>
bool equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

/// Kronecker product in row-major basis order: (a (x) b)(i*p + k, j*q + l) = a(i,j) b(k,l).
template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> out = Mat<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

/// Sparse-aware product; avoids Eigen's blocked kernel, which touches every
/// zero entry of exact matrices.
template <class Scalar>
Mat<Scalar> mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
    Mat<Scalar> out = Mat<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index k = 0; k < a.cols(); ++k)
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    return out;
}

/// Elementwise scalar multiple.
template <class Scalar>
Mat<Scalar> scaled(const Mat<Scalar>& a, const Scalar& c) {
    if (c.is_one()) return a;
    Mat<Scalar> out = a;
    for (Eigen::Index j = 0; j < out.cols(); ++j)
        for (Eigen::Index i = 0; i < out.rows(); ++i)
            if (!out(i, j).is_zero()) out(i, j) *= c;
    return out;
}

}  // namespace qschur
