#ifndef LIEDEFORM_COHOMOLOGY_HPP
#define LIEDEFORM_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "liedeform/complex.hpp"

namespace liedeform {

/// dim of degree-p cochains: C(m,p+1) m + C(n,p+1) n + C(m,p) n, the last
/// summand absent at p = 0.
inline std::size_t cochain_dim(int degree, int m, int n)
{
  std::size_t d = binomial(m, degree + 1) * static_cast<std::size_t>(m) +
                  binomial(n, degree + 1) * static_cast<std::size_t>(n);
  if (degree > 0)
    d += binomial(m, degree) * static_cast<std::size_t>(n);
  return d;
}

namespace detail {

template <typename Scalar>
void append(VectorX<Scalar> &out, Index &at, const SkewMap<Scalar> &x)
{
  const auto &c = x.coefficients();
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < c.rows(); ++i)
      out(at++) = c(i, j);
}

template <typename Scalar>
SkewMap<Scalar> take(const VectorX<Scalar> &v, Index &at, int arity, int source, int target)
{
  SkewMap<Scalar> x(arity, source, target);
  auto &c = x.coefficients();
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < c.rows(); ++i)
      c(i, j) = v(at++);
  return x;
}

} // namespace detail

/// Coordinates: x1 block, then x2, then x3; inside a block, index tuples in
/// lexicographic order with the target index varying fastest.
template <typename Scalar>
VectorX<Scalar> flatten(const Cochain<Scalar> &c)
{
  VectorX<Scalar> v(static_cast<Index>(cochain_dim(c.degree(), c.source_dim(), c.target_dim())));
  Index at = 0;
  detail::append(v, at, c.x1());
  detail::append(v, at, c.x2());
  if (c.x3())
    detail::append(v, at, *c.x3());
  return v;
}

template <typename Scalar>
Cochain<Scalar> unflatten(int degree, int m, int n, const VectorX<Scalar> &v)
{
  if (degree < 0)
    throw DimensionError("unflatten: negative degree");
  if (v.size() != static_cast<Index>(cochain_dim(degree, m, n)))
    throw DimensionError("unflatten: vector length does not match the cochain space");
  Index at = 0;
  auto x1 = detail::take(v, at, degree + 1, m, m);
  auto x2 = detail::take(v, at, degree + 1, n, n);
  std::optional<SkewMap<Scalar>> x3;
  if (degree > 0)
    x3 = detail::take(v, at, degree, m, n);
  return Cochain<Scalar>(degree, std::move(x1), std::move(x2), std::move(x3));
}

/// Matrix of big_delta at degree p in the flatten bases.
template <typename Scalar>
MatrixX<Scalar> delta_matrix(const Triple<Scalar> &t, int degree, SignConvention conv)
{
  const int m = t.source_dim();
  const int n = t.target_dim();
  const auto cols = static_cast<Index>(cochain_dim(degree, m, n));
  const auto rows = static_cast<Index>(cochain_dim(degree + 1, m, n));
  MatrixX<Scalar> out(rows, cols);
  VectorX<Scalar> unit = VectorX<Scalar>::Zero(cols);
  for (Index j = 0; j < cols; ++j) {
    unit(j) = Scalar(1);
    out.col(j) = flatten(big_delta(t, unflatten(degree, m, n, unit), conv));
    unit(j) = Scalar(0);
  }
  return out;
}

struct CohomologyDims
{
  std::size_t cochains = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology = 0;

  friend bool operator==(const CohomologyDims &, const CohomologyDims &) = default;
};

template <typename Scalar>
struct CohomologyReport
{
  int degree = 0;
  SignConvention convention = SignConvention::paper;
  CohomologyDims dims;
  /// Kernel basis of the degree-p differential, in nullspace pivot order.
  std::vector<Cochain<Scalar>> cocycle_basis;
};

/// Z^p = ker of the degree-p differential, B^p = its image from degree p-1
/// (B^0 = 0), H^p reported as dim Z^p - dim B^p.
template <typename Scalar>
CohomologyReport<Scalar> cohomology(const Triple<Scalar> &t, int degree,
                                    SignConvention conv = SignConvention::paper)
{
  if (degree < 0)
    throw DimensionError("cohomology: negative degree");
  CohomologyReport<Scalar> r;
  r.degree = degree;
  r.convention = conv;
  const auto kernel = nullspace(delta_matrix(t, degree, conv));
  r.dims.cochains = cochain_dim(degree, t.source_dim(), t.target_dim());
  r.dims.cocycles = kernel.size();
  r.dims.coboundaries = degree == 0 ? 0 : static_cast<std::size_t>(rank(delta_matrix(t, degree - 1, conv)));
  r.dims.cohomology = r.dims.cocycles - r.dims.coboundaries;
  for (const auto &v : kernel)
    r.cocycle_basis.push_back(unflatten(degree, t.source_dim(), t.target_dim(), v));
  return r;
}

template <typename Scalar>
bool is_cocycle(const Triple<Scalar> &t, const Cochain<Scalar> &c, SignConvention conv = SignConvention::paper)
{
  return big_delta(t, c, conv).is_zero();
}

/// A preimage under the degree-(p-1) differential, or nullopt when c is not a
/// coboundary. Requires degree >= 1; use `in_coboundaries` for degree 0.
template <typename Scalar>
std::optional<Cochain<Scalar>> is_coboundary(const Triple<Scalar> &t, const Cochain<Scalar> &c,
                                             SignConvention conv = SignConvention::paper)
{
  if (c.degree() < 1)
    throw DimensionError("is_coboundary: degree-0 cochains have no preimage space");
  const auto sol = solve_affine(delta_matrix(t, c.degree() - 1, conv), flatten(c));
  if (!sol)
    return std::nullopt;
  return unflatten(c.degree() - 1, t.source_dim(), t.target_dim(), sol->particular);
}

template <typename Scalar>
bool in_coboundaries(const Triple<Scalar> &t, const Cochain<Scalar> &c, SignConvention conv = SignConvention::paper)
{
  if (c.degree() == 0)
    return c.is_zero();
  return is_coboundary(t, c, conv).has_value();
}

// Fixed-algebra morphism complex ^p(U, V) with the plain differential and the
// classical degree-0 space V. Used for Whitehead-type checks.

template <typename Scalar>
MatrixX<Scalar> morphism_delta_matrix(const Triple<Scalar> &t, int degree)
{
  const int m = t.source_dim();
  const int n = t.target_dim();
  if (degree < 0)
    throw DimensionError("morphism_delta_matrix: negative degree");
  const auto cols = static_cast<Index>(degree == 0 ? static_cast<std::size_t>(n) : binomial(m, degree) * n);
  const auto rows = static_cast<Index>(binomial(m, degree + 1) * n);
  MatrixX<Scalar> out(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    VectorX<Scalar> unit = VectorX<Scalar>::Zero(cols);
    unit(j) = Scalar(1);
    SkewMap<Scalar> image = [&] {
      if (degree == 0)
        return delta_morphism_degree0(t, unit);
      MatrixX<Scalar> coeffs = Eigen::Map<const MatrixX<Scalar>>(unit.data(), n, static_cast<Index>(binomial(m, degree)));
      return delta_morphism(t, SkewMap<Scalar>(degree, m, std::move(coeffs)));
    }();
    out.col(j) = Eigen::Map<const VectorX<Scalar>>(image.coefficients().data(), rows);
  }
  return out;
}

template <typename Scalar>
CohomologyDims morphism_cohomology(const Triple<Scalar> &t, int degree)
{
  CohomologyDims d;
  const auto mat = morphism_delta_matrix(t, degree);
  d.cochains = static_cast<std::size_t>(mat.cols());
  d.cocycles = d.cochains - static_cast<std::size_t>(rank(mat));
  d.coboundaries = degree == 0 ? 0 : static_cast<std::size_t>(rank(morphism_delta_matrix(t, degree - 1)));
  d.cohomology = d.cocycles - d.coboundaries;
  return d;
}

} // namespace liedeform

#endif
