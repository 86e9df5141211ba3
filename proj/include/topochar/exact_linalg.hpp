#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "topochar/complex.hpp"
#include "topochar/integer.hpp"

namespace topochar {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/// Largest |G| for which L and g are built.
inline constexpr std::size_t kMatrixSizeCap = 2048;

/// L(x,y) = 1 if x and y meet, else 0; rows in canonical simplex order.
/// DomainError for the void or when |G| exceeds `cap`.
IntMatrix connection_matrix(const Complex& g, std::size_t cap = kMatrixSizeCap);

/// L(x,y) = Euler characteristic of K(x) intersected with K(y).
IntMatrix connection_matrix_from_cores(const Complex& g, std::size_t cap = kMatrixSizeCap);

/// g(x,y) = w(x) w(y) chi(U(x) intersected with U(y)).
IntMatrix green_matrix(const Complex& g, std::size_t cap = kMatrixSizeCap);

namespace detail {
Integer det(IntMatrix a);
RationalMatrix inverse(RationalMatrix a);
std::size_t rank(IntMatrix a);
std::vector<Integer> char_poly(const IntMatrix& a);
}  // namespace detail

/// Fraction-free (Bareiss) determinant. DomainError if not square.
template <class Derived>
Integer det(const Eigen::MatrixBase<Derived>& m) {
  return detail::det(IntMatrix(m));
}

/// Exact inverse over the rationals. SingularError when singular.
template <class Derived>
RationalMatrix inverse(const Eigen::MatrixBase<Derived>& m) {
  return detail::inverse(IntMatrix(m).template cast<Rational>());
}

/// Exact integer inverse; SingularError unless det is +1 or -1.
IntMatrix integer_inverse(const IntMatrix& m);

/// Rank over the rationals by fraction-free elimination.
template <class Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return detail::rank(IntMatrix(m));
}

/// Coefficients c_0..c_n of det(t I - M), lowest degree first.
/// DomainError if not square.
template <class Derived>
std::vector<Integer> char_poly(const Eigen::MatrixBase<Derived>& m) {
  return detail::char_poly(IntMatrix(m));
}

/// Entries that fit into 64 bits; std::overflow_error otherwise.
std::vector<std::vector<long long>> to_rows(const IntMatrix& m);

}  // namespace topochar
