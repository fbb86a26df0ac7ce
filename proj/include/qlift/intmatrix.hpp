#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "qlift/bitmatrix.hpp"
#include "qlift/errors.hpp"

namespace qlift {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Integer matrix housing Z-lifted boundary maps.
using IntMatrix = DenseMatrix<std::int64_t>;

namespace detail {

template <typename Scalar>
Scalar checked_mul(Scalar a, Scalar b) {
  Scalar out{};
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "integer product overflow");
  return out;
}

template <typename Scalar>
Scalar checked_add(Scalar a, Scalar b) {
  Scalar out{};
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::overflow, "integer sum overflow");
  return out;
}

}  // namespace detail

/// Exact product a*b; throws ErrorKind::overflow instead of wrapping.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> multiply(const Eigen::MatrixBase<DerivedA>& a,
                                                const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>, "operands must share a scalar type");
  static_assert(std::is_integral_v<Scalar>, "checked product is for integer matrices");
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::dimension, "product shape mismatch: " + std::to_string(a.cols()) + " vs " +
                                          std::to_string(b.rows()));
  }
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        out(i, j) = detail::checked_add(out(i, j), detail::checked_mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

/// Entrywise reduction into [0, 2^exponent).
IntMatrix mod_reduce(const IntMatrix& m, int exponent);

/// Reduction mod 2 as a bit matrix.
BitMatrix to_bits(const IntMatrix& m);
/// Reinterpret a bit matrix over Z (entries 0/1).
IntMatrix from_bits(const BitMatrix& m);

IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);
/// True iff every entry is odd where `support` is set and zero elsewhere.
bool is_odd_on_support(const IntMatrix& m, const BitMatrix& support);

std::string to_string(const IntMatrix& m);

}  // namespace qlift
