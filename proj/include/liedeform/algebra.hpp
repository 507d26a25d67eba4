#ifndef LIEDEFORM_ALGEBRA_HPP
#define LIEDEFORM_ALGEBRA_HPP

#include <array>
#include <string>

#include "liedeform/skew_map.hpp"

namespace liedeform {

/// (a, b, c) -> sum over cyclic permutations of outer(inner(a, b), c).
///
/// Alternating whenever both inputs are. With outer = inner = rho this is the
/// Jacobi expression; the mixed sums are the order-by-order pieces of it.
template <typename Scalar>
SkewMap<Scalar> jacobi_pair(const SkewMap<Scalar> &outer, const SkewMap<Scalar> &inner)
{
  if (outer.arity() != 2 || inner.arity() != 2)
    throw DimensionError("jacobi_pair: brackets must have arity 2");
  const int n = outer.source_dim();
  if (outer.target_dim() != n || inner.source_dim() != n || inner.target_dim() != n)
    throw DimensionError("jacobi_pair: brackets must be endomorphic on one space");
  SkewMap<Scalar> out(3, n, n);
  Index col = 0;
  for (const auto &t : out.tuples()) {
    const std::array<std::array<int, 3>, 3> cyc{{{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}}};
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    for (const auto &c : cyc) {
      const std::array<int, 2> ab{c[0], c[1]};
      const std::array<int, 1> rest{c[2]};
      v += outer.eval_first(inner.eval_basis(ab), rest);
    }
    out.coefficients().col(col++) = v;
  }
  return out;
}

/// Finite-dimensional Lie bracket given by structure constants.
///
/// The bracket is an arity-2 SkewMap on a single space, so only [e_i, e_j]
/// with i < j is stored and antisymmetry holds by construction. Instances made
/// through the checked constructor satisfy Jacobi exactly; `unchecked` exists
/// for brackets that deliberately fail it.
template <typename Scalar>
class LieAlgebra
{
public:
  using Vector = VectorX<Scalar>;

  /// Abelian algebra of dimension n.
  explicit LieAlgebra(int n = 0) : bracket_(2, n, n), verified_(true) {}

  /// Throws PreconditionError if Jacobi fails.
  explicit LieAlgebra(SkewMap<Scalar> bracket) : bracket_(std::move(bracket)), verified_(false)
  {
    check_square();
    if (!jacobi_pair(bracket_, bracket_).is_zero())
      throw PreconditionError("bracket does not satisfy the Jacobi identity");
    verified_ = true;
  }

  static LieAlgebra unchecked(SkewMap<Scalar> bracket)
  {
    LieAlgebra a;
    a.bracket_ = std::move(bracket);
    a.verified_ = false;
    a.check_square();
    return a;
  }

  int dim() const { return bracket_.source_dim(); }
  bool verified() const { return verified_; }
  const SkewMap<Scalar> &bracket_map() const { return bracket_; }

  /// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
  Scalar structure_constant(int i, int j, int k) const
  {
    const std::array<int, 2> ij{i, j};
    return bracket_.eval_basis(ij)(k);
  }

  Vector bracket(const Vector &u, const Vector &v) const { return bracket_.eval2(u, v); }
  Vector bracket_basis(int i, int j) const
  {
    const std::array<int, 2> ij{i, j};
    return bracket_.eval_basis(ij);
  }

  bool is_abelian() const { return bracket_.is_zero(); }

  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) { return a.bracket_ == b.bracket_; }

private:
  void check_square() const
  {
    if (bracket_.arity() != 2 || bracket_.target_dim() != bracket_.source_dim())
      throw DimensionError("LieAlgebra: bracket must be an arity-2 map from a space to itself");
  }

  SkewMap<Scalar> bracket_;
  bool verified_;
};

/// Trilinear alternating map (a, b, c) -> sum_cyclic rho(rho(a, b), c).
template <typename Scalar>
SkewMap<Scalar> jacobi_defect(const LieAlgebra<Scalar> &rho)
{
  return jacobi_pair(rho.bracket_map(), rho.bracket_map());
}

/// Pulled-back bracket (a, b) -> g^{-1} rho(g a, g b). Throws PreconditionError
/// when g is singular.
template <typename Scalar>
LieAlgebra<Scalar> act_algebra(const MatrixX<Scalar> &g, const LieAlgebra<Scalar> &rho)
{
  if (g.rows() != rho.dim() || g.cols() != rho.dim())
    throw DimensionError("act_algebra: group element has wrong shape");
  MatrixX<Scalar> ginv;
  try {
    ginv = inverse(g);
  } catch (const std::domain_error &) {
    throw PreconditionError("act_algebra: group element is singular");
  }
  auto pulled = compose(ginv, diamond(rho.bracket_map(), g));
  if (rho.verified())
    return LieAlgebra<Scalar>(std::move(pulled));
  return LieAlgebra<Scalar>::unchecked(std::move(pulled));
}

/// (a, b) -> phi(rho(a, b)) - theta(phi a, phi b).
template <typename Scalar>
SkewMap<Scalar> morphism_defect(const LieAlgebra<Scalar> &rho, const LieAlgebra<Scalar> &theta,
                                const MatrixX<Scalar> &phi)
{
  if (phi.cols() != rho.dim() || phi.rows() != theta.dim())
    throw DimensionError("morphism_defect: linear map shape does not match the algebras");
  return compose(phi, rho.bracket_map()) - diamond(theta.bracket_map(), phi);
}

/// A point (rho, theta, phi) of the morphism bundle.
///
/// The checked constructor requires both brackets to be verified Lie algebras
/// and phi to be a morphism between them.
template <typename Scalar>
class Triple
{
public:
  Triple() = default;

  Triple(LieAlgebra<Scalar> rho, LieAlgebra<Scalar> theta, MatrixX<Scalar> phi)
      : rho_(std::move(rho)), theta_(std::move(theta)), phi_(std::move(phi))
  {
    check_shape();
    if (!rho_.verified() || !theta_.verified())
      throw PreconditionError("Triple: algebras must satisfy the Jacobi identity");
    if (!morphism_defect(rho_, theta_, phi_).is_zero())
      throw PreconditionError("Triple: linear map is not a Lie algebra morphism");
    verified_ = true;
  }

  static Triple unchecked(LieAlgebra<Scalar> rho, LieAlgebra<Scalar> theta, MatrixX<Scalar> phi)
  {
    Triple t;
    t.rho_ = std::move(rho);
    t.theta_ = std::move(theta);
    t.phi_ = std::move(phi);
    t.check_shape();
    return t;
  }

  const LieAlgebra<Scalar> &rho() const { return rho_; }
  const LieAlgebra<Scalar> &theta() const { return theta_; }
  const MatrixX<Scalar> &phi() const { return phi_; }
  int source_dim() const { return rho_.dim(); }
  int target_dim() const { return theta_.dim(); }
  bool verified() const { return verified_; }

  friend bool operator==(const Triple &a, const Triple &b)
  {
    return a.rho_ == b.rho_ && a.theta_ == b.theta_ && a.phi_.rows() == b.phi_.rows() &&
           a.phi_.cols() == b.phi_.cols() && a.phi_ == b.phi_;
  }

private:
  void check_shape() const
  {
    if (phi_.cols() != rho_.dim() || phi_.rows() != theta_.dim())
      throw DimensionError("Triple: linear map must be " + std::to_string(theta_.dim()) + "x" +
                           std::to_string(rho_.dim()));
  }

  LieAlgebra<Scalar> rho_;
  LieAlgebra<Scalar> theta_;
  MatrixX<Scalar> phi_ = MatrixX<Scalar>(0, 0);
  bool verified_ = false;
};

template <typename Scalar>
SkewMap<Scalar> morphism_defect(const Triple<Scalar> &t)
{
  return morphism_defect(t.rho(), t.theta(), t.phi());
}

/// (g, h) . (rho, theta, phi) = (g.rho, h.theta, h^{-1} phi g).
///
/// This is a right action: act(g2, h2, act(g1, h1, t)) == act(g1 g2, h1 h2, t).
template <typename Scalar>
Triple<Scalar> act_triple(const MatrixX<Scalar> &g, const MatrixX<Scalar> &h, const Triple<Scalar> &t)
{
  auto rho = act_algebra(g, t.rho());
  auto theta = act_algebra(h, t.theta());
  MatrixX<Scalar> phi = inverse(h) * t.phi() * g;
  if (t.verified())
    return Triple<Scalar>(std::move(rho), std::move(theta), std::move(phi));
  return Triple<Scalar>::unchecked(std::move(rho), std::move(theta), std::move(phi));
}

} // namespace liedeform

#endif
