#pragma once

#include <utility>
#include <vector>

#include "ncsieve/cyclo.hpp"
#include "ncsieve/errors.hpp"

namespace ncsieve {

// Exact dense linear algebra over a field scalar. The scalar must provide
// free functions is_zero(s) and inverse(s) alongside the usual arithmetic;
// no pivoting by magnitude is attempted, any nonzero pivot is exact.

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;           // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <class Scalar>
Echelon<Scalar> row_reduce(Matrix<Scalar> a) {
  Echelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = inverse(a(row, col));
    for (Eigen::Index k = col; k < a.cols(); ++k)
      if (!is_zero(a(row, k))) a(row, k) = a(row, k) * inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Scalar t = a(r, col);
      for (Eigen::Index k = col; k < a.cols(); ++k)
        if (!is_zero(a(row, k))) a(r, k) -= t * a(row, k);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

/// Rank by forward elimination only (cheaper than the reduced form).
template <class Scalar>
Eigen::Index rank(Matrix<Scalar> a) {
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const Scalar inv = inverse(a(row, col));
    for (Eigen::Index r = row + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar t = a(r, col) * inv;
      for (Eigen::Index k = col + 1; k < a.cols(); ++k)
        if (!is_zero(a(row, k))) a(r, k) -= t * a(row, k);
      a(r, col) = Scalar(0);
    }
    ++row;
  }
  return row;
}

/// Basis of the right kernel {x : a x = 0}, one basis vector per column.
template <class Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a) {
  const Echelon<Scalar> e = row_reduce<Scalar>(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  const Eigen::Index nfree = a.cols() - static_cast<Eigen::Index>(e.pivots.size());
  Matrix<Scalar> k(a.cols(), nfree);
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    for (Eigen::Index j = 0; j < k.cols(); ++j) k(i, j) = Scalar(0);
  Eigen::Index j = 0;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, j) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = -e.reduced(static_cast<Eigen::Index>(r), f);
    ++j;
  }
  return k;
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw DomainError("determinant: matrix must be square");
  Scalar det(1);
  for (Eigen::Index col = 0; col < a.cols(); ++col) {
    Eigen::Index p = col;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) return Scalar(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    const Scalar inv = inverse(a(col, col));
    for (Eigen::Index r = col + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      const Scalar t = a(r, col) * inv;
      for (Eigen::Index k = col + 1; k < a.cols(); ++k)
        if (!is_zero(a(col, k))) a(r, k) -= t * a(col, k);
    }
  }
  return det;
}

/// Inverse of a nonsingular square matrix (DomainError when singular).
template <class Scalar>
Matrix<Scalar> invert(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("invert: matrix must be square");
  Matrix<Scalar> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = a(i, j);
      aug(i, n + j) = Scalar(i == j ? 1 : 0);
    }
  const Echelon<Scalar> e = row_reduce<Scalar>(std::move(aug));
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw DomainError("invert: matrix is singular");
  return e.reduced.rightCols(n);
}

/// Exact product without Eigen's blocked kernels (cheaper for heavy scalars
/// with many zero entries).
template <class Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: shape mismatch");
  Matrix<Scalar> r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (!is_zero(a(i, k)) && !is_zero(b(k, j))) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

template <class Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n) {
  Matrix<Scalar> r(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) r(i, j) = Scalar(i == j ? 1 : 0);
  return r;
}

template <class Scalar>
bool equal(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace ncsieve
