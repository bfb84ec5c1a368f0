#pragma once

// Dense matrices over exact rings, stored in Eigen containers. The
// determinant routines are generic over the scalar ring: anything with
// +, -, *, an is_zero() overload and an exact_quotient() overload works
// (Integer and Polynomial are provided).

#include "horadam/exactnum.hpp"
#include "horadam/polynomial.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <utility>

namespace Eigen {

template <>
struct NumTraits<horadam::Polynomial> : GenericNumTraits<horadam::Polynomial> {
    using Real = horadam::Polynomial;
    using NonInteger = horadam::Polynomial;
    using Nested = horadam::Polynomial;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 200
    };
};

template <>
struct NumTraits<horadam::QPolynomial> : GenericNumTraits<horadam::QPolynomial> {
    using Real = horadam::QPolynomial;
    using NonInteger = horadam::QPolynomial;
    using Nested = horadam::QPolynomial;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 80,
        MulCost = 300
    };
};

template <>
struct NumTraits<horadam::Integer> : GenericNumTraits<horadam::Integer> {
    using Real = horadam::Integer;
    using NonInteger = horadam::Rational;
    using Nested = horadam::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 5,
        AddCost = 10,
        MulCost = 40
    };
};

}  // namespace Eigen

namespace horadam {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = Matrix<Polynomial>;
using IntMatrix = Matrix<Integer>;

inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const Polynomial& v) { return v.is_zero(); }

inline Integer exact_quotient(const Integer& num, const Integer& den) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) { return poly_exact_div(num, den); }

/// Single-step fraction-free (Bareiss) elimination. The pivot for column c
/// is the first row at or below c with a nonzero entry; a column with no
/// such entry gives determinant 0. Every division is exact in the ring.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
    const Eigen::Index n = m.rows();
    eigen_assert(m.cols() == n);
    if (n == 0) {
        return Scalar(1);
    }
    bool negate = false;
    Scalar previous_pivot(1);
    for (Eigen::Index c = 0; c + 1 < n; ++c) {
        Eigen::Index pivot = c;
        while (pivot < n && is_zero(m(pivot, c))) {
            ++pivot;
        }
        if (pivot == n) {
            return Scalar(0);
        }
        if (pivot != c) {
            m.row(pivot).swap(m.row(c));
            negate = !negate;
        }
        for (Eigen::Index i = c + 1; i < n; ++i) {
            for (Eigen::Index j = c + 1; j < n; ++j) {
                Scalar updated = m(c, c) * m(i, j) - m(i, c) * m(c, j);
                m(i, j) = exact_quotient(updated, previous_pivot);
            }
        }
        previous_pivot = m(c, c);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

namespace detail {

template <typename Scalar>
Scalar cofactor_minor(const Matrix<Scalar>& m, std::vector<Eigen::Index>& cols, Eigen::Index row) {
    if (cols.size() == 1) {
        return m(row, cols.front());
    }
    Scalar sum(0);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        const Eigen::Index col = cols[i];
        if (is_zero(m(row, col))) {
            continue;
        }
        std::vector<Eigen::Index> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != i) {
                rest.push_back(cols[j]);
            }
        }
        Scalar term = m(row, col) * cofactor_minor(m, rest, row + 1);
        if (i % 2 == 0) {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
    }
    return sum;
}

}  // namespace detail

/// Laplace expansion along the first row. Exponential cost; meant as an
/// independent check for small matrices.
template <typename Scalar>
Scalar cofactor_determinant(const Matrix<Scalar>& m) {
    eigen_assert(m.rows() == m.cols());
    if (m.rows() == 0) {
        return Scalar(1);
    }
    std::vector<Eigen::Index> cols(static_cast<std::size_t>(m.cols()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
        cols[i] = static_cast<Eigen::Index>(i);
    }
    return detail::cofactor_minor(m, cols, 0);
}

}  // namespace horadam
