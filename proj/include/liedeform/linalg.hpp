#ifndef LIEDEFORM_LINALG_HPP
#define LIEDEFORM_LINALG_HPP

// Exact dense linear algebra over a field scalar.
//
// Everything here assumes Scalar arithmetic is exact: a value is either zero
// or it is not, so pivoting never consults a tolerance.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace liedeform {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived> &m)
{
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0))
        return false;
  return true;
}

template <typename Scalar>
struct RrefResult
{
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;
};

/// Reduced row-echelon form. Pivot search scans columns left to right and
/// takes the first row at or below the current one with a nonzero entry.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived> &m)
{
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out{m, {}};
  MatrixX<Scalar> &r = out.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index piv = row;
    while (piv < r.rows() && r(piv, col) == Scalar(0))
      ++piv;
    if (piv == r.rows())
      continue;
    if (piv != row)
      r.row(piv).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j)
      r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == Scalar(0))
        continue;
      const Scalar f = r(i, col);
      for (Index j = col; j < r.cols(); ++j)
        r(i, j) -= f * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived> &m)
{
  return static_cast<Index>(rref(m).pivots.size());
}

namespace detail {

template <typename Scalar>
std::vector<VectorX<Scalar>> kernel_from_rref(const RrefResult<Scalar> &rr, Index cols)
{
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : rr.pivots)
    is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)])
      continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
      v(rr.pivots[k]) = -rr.reduced(static_cast<Index>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace detail

/// Kernel basis, one vector per non-pivot column in increasing column order.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace(const Eigen::MatrixBase<Derived> &m)
{
  return detail::kernel_from_rref(rref(m), m.cols());
}

template <typename Scalar>
struct AffineSolution
{
  VectorX<Scalar> particular;
  std::vector<VectorX<Scalar>> kernel;
};

/// Solves m x = b. Returns nullopt when b is not in the column space of m;
/// otherwise a particular solution (free variables set to zero) and a kernel basis.
template <typename DerivedM, typename DerivedB>
std::optional<AffineSolution<typename DerivedM::Scalar>>
solve_affine(const Eigen::MatrixBase<DerivedM> &m, const Eigen::MatrixBase<DerivedB> &b)
{
  using Scalar = typename DerivedM::Scalar;
  if (b.rows() != m.rows() || b.cols() != 1)
    throw std::invalid_argument("solve_affine: right-hand side length must equal row count");
  MatrixX<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
    return std::nullopt;
  AffineSolution<Scalar> sol;
  sol.particular = VectorX<Scalar>::Zero(m.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k)
    sol.particular(rr.pivots[k]) = rr.reduced(static_cast<Index>(k), m.cols());
  sol.kernel = detail::kernel_from_rref(rr, m.cols());
  return sol;
}

/// Exact inverse via Gauss-Jordan on [m | I]. Throws std::domain_error if singular.
template <typename Derived>
MatrixX<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived> &m)
{
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto rr = rref(aug);
  if (static_cast<Index>(rr.pivots.size()) < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  return rr.reduced.rightCols(n);
}

/// Exact determinant by fraction-carrying Gaussian elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived> &m)
{
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix is not square");
  MatrixX<Scalar> a = m;
  const Index n = a.rows();
  Scalar det(1);
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && a(piv, col) == Scalar(0))
      ++piv;
    if (piv == n)
      return Scalar(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col) == Scalar(0))
        continue;
      const Scalar f = a(i, col) / a(col, col);
      for (Index j = col; j < n; ++j)
        a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

} // namespace liedeform

#endif
