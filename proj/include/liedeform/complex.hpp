#ifndef LIEDEFORM_COMPLEX_HPP
#define LIEDEFORM_COMPLEX_HPP

// Coboundary operators of the deformation complex of a Lie algebra morphism.
//
// delta_morphism uses the overall sign below,
// which is the negative of the textbook Chevalley-Eilenberg
// differential:
//
//   (d psi)(x_1..x_{p+1}) = sum_s (-1)^s theta(phi x_s, psi(.. ^x_s ..))
//                         + sum_{s<t} (-1)^{s+t-1} psi(rho(x_s, x_t), .. ^x_s .. ^x_t ..)
//
// (1-based s, t). Setting theta = rho and phi = id gives the Lie algebra
// differential; at p = 2 that is exactly sum_cyc rho(x(a,b),c) + x(rho(a,b),c).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedeform/algebra.hpp"

namespace liedeform {

/// Sign of the mixed term phi o X1 - X2 <> phi in the degree-p combined
/// differential. `paper` uses (-1)^p; `geometric` uses (-1)^(p+1), which is
/// the sign that makes the first-order expansion of a deformation a cocycle.
/// The two are conjugate under (x1, x2, x3) -> (x1, x2, -x3).
enum class SignConvention { paper, geometric };

inline std::string_view to_string(SignConvention c)
{
  return c == SignConvention::paper ? "paper" : "geometric";
}

inline std::optional<SignConvention> parse_convention(std::string_view s)
{
  if (s == "paper")
    return SignConvention::paper;
  if (s == "geometric")
    return SignConvention::geometric;
  return std::nullopt;
}

inline int mixed_sign(int degree, SignConvention c)
{
  const int base = (degree % 2 == 0) ? 1 : -1;
  return c == SignConvention::paper ? base : -base;
}

/// Degree-p cochain (X1, X2, X3): X1 alternating (p+1)-form on U with values
/// in U, X2 the same on V, X3 a p-form from U to V. X3 is absent at degree 0.
template <typename Scalar>
class Cochain
{
public:
  Cochain(int degree, SkewMap<Scalar> x1, SkewMap<Scalar> x2, std::optional<SkewMap<Scalar>> x3)
      : degree_(degree), x1_(std::move(x1)), x2_(std::move(x2)), x3_(std::move(x3))
  {
    if (degree < 0)
      throw DimensionError("Cochain: negative degree");
    const int m = x1_.source_dim();
    const int n = x2_.source_dim();
    if (x1_.arity() != degree + 1 || x1_.target_dim() != m)
      throw DimensionError("Cochain: x1 must be an endomorphic (p+1)-form");
    if (x2_.arity() != degree + 1 || x2_.target_dim() != n)
      throw DimensionError("Cochain: x2 must be an endomorphic (p+1)-form");
    if (degree == 0) {
      if (x3_)
        throw DimensionError("Cochain: degree-0 cochains have no x3 component");
    } else {
      if (!x3_)
        throw DimensionError("Cochain: x3 component missing");
      if (x3_->arity() != degree || x3_->source_dim() != m || x3_->target_dim() != n)
        throw DimensionError("Cochain: x3 must be a p-form from U to V");
    }
  }

  static Cochain zero(int degree, int m, int n)
  {
    std::optional<SkewMap<Scalar>> x3;
    if (degree > 0)
      x3.emplace(degree, m, n);
    return Cochain(degree, SkewMap<Scalar>(degree + 1, m, m), SkewMap<Scalar>(degree + 1, n, n),
                   std::move(x3));
  }

  int degree() const { return degree_; }
  int source_dim() const { return x1_.source_dim(); }
  int target_dim() const { return x2_.source_dim(); }
  const SkewMap<Scalar> &x1() const { return x1_; }
  const SkewMap<Scalar> &x2() const { return x2_; }
  const std::optional<SkewMap<Scalar>> &x3() const { return x3_; }

  bool is_zero() const { return x1_.is_zero() && x2_.is_zero() && (!x3_ || x3_->is_zero()); }

  Cochain &operator+=(const Cochain &o)
  {
    require_same_space(o);
    x1_ += o.x1_;
    x2_ += o.x2_;
    if (x3_)
      *x3_ += *o.x3_;
    return *this;
  }
  Cochain &operator*=(const Scalar &s)
  {
    x1_ *= s;
    x2_ *= s;
    if (x3_)
      *x3_ *= s;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain &b) { return a += Scalar(-1) * b; }
  friend Cochain operator*(const Scalar &s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain &a, const Cochain &b)
  {
    return a.degree_ == b.degree_ && a.x1_ == b.x1_ && a.x2_ == b.x2_ && a.x3_ == b.x3_;
  }

private:
  void require_same_space(const Cochain &o) const
  {
    if (degree_ != o.degree_ || source_dim() != o.source_dim() || target_dim() != o.target_dim())
      throw DimensionError("Cochain: operands live in different cochain spaces");
  }

  int degree_;
  SkewMap<Scalar> x1_;
  SkewMap<Scalar> x2_;
  std::optional<SkewMap<Scalar>> x3_;
};

/// (x1, x2, x3) -> (x1, x2, -x3); intertwines the two sign conventions.
template <typename Scalar>
Cochain<Scalar> flip_mixed(Cochain<Scalar> c)
{
  std::optional<SkewMap<Scalar>> x3 = c.x3();
  if (x3)
    *x3 *= Scalar(-1);
  return Cochain<Scalar>(c.degree(), c.x1(), c.x2(), std::move(x3));
}

/// Morphism-complex differential of psi in ^p(U, V) for the data (rho, theta, phi).
/// No morphism check is made; the square-zero property needs one.
template <typename Scalar>
SkewMap<Scalar> delta_morphism(const LieAlgebra<Scalar> &rho, const LieAlgebra<Scalar> &theta,
                               const MatrixX<Scalar> &phi, const SkewMap<Scalar> &psi)
{
  const int m = rho.dim();
  const int n = theta.dim();
  if (phi.rows() != n || phi.cols() != m)
    throw DimensionError("delta_morphism: linear map shape does not match the algebras");
  if (psi.source_dim() != m || psi.target_dim() != n)
    throw DimensionError("delta_morphism: cochain dimensions do not match the triple");
  const int p = psi.arity();
  SkewMap<Scalar> out(p + 1, m, n);
  IndexTuple rest;
  Index col = 0;
  for (const auto &tuple : out.tuples()) {
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    for (int s = 0; s <= p; ++s) {
      rest.clear();
      for (int k = 0; k <= p; ++k)
        if (k != s)
          rest.push_back(tuple[static_cast<std::size_t>(k)]);
      VectorX<Scalar> term =
          theta.bracket(phi.col(tuple[static_cast<std::size_t>(s)]), psi.coefficients().col(psi.column_of(rest)));
      if (s % 2 == 0)
        v -= term; // (-1)^(s+1) with 0-based s
      else
        v += term;
    }
    for (int s = 0; s <= p; ++s)
      for (int t = s + 1; t <= p; ++t) {
        rest.clear();
        for (int k = 0; k <= p; ++k)
          if (k != s && k != t)
            rest.push_back(tuple[static_cast<std::size_t>(k)]);
        VectorX<Scalar> term = psi.eval_first(
            rho.bracket_basis(tuple[static_cast<std::size_t>(s)], tuple[static_cast<std::size_t>(t)]), rest);
        if ((s + t) % 2 == 0)
          v -= term; // (-1)^(s+t+1) with 0-based s, t
        else
          v += term;
      }
    out.coefficients().col(col++) = v;
  }
  return out;
}

template <typename Scalar>
SkewMap<Scalar> delta_morphism(const Triple<Scalar> &t, const SkewMap<Scalar> &psi)
{
  return delta_morphism(t.rho(), t.theta(), t.phi(), psi);
}

/// The same formula on a degree-0 cochain v in V (the classical convention
/// ^0(U, V) = V): x -> -theta(phi x, v).
template <typename Scalar>
SkewMap<Scalar> delta_morphism_degree0(const Triple<Scalar> &t, const VectorX<Scalar> &v)
{
  if (v.size() != t.target_dim())
    throw DimensionError("delta_morphism_degree0: vector has wrong length");
  SkewMap<Scalar> out(1, t.source_dim(), t.target_dim());
  for (int i = 0; i < t.source_dim(); ++i)
    out.coefficients().col(i) = -t.theta().bracket(t.phi().col(i), v);
  return out;
}

/// Lie algebra differential: delta_morphism with theta = rho, phi = id.
template <typename Scalar>
SkewMap<Scalar> delta_algebra(const LieAlgebra<Scalar> &rho, const SkewMap<Scalar> &x)
{
  return delta_morphism(rho, rho, MatrixX<Scalar>::Identity(rho.dim(), rho.dim()).eval(), x);
}

/// Combined differential on degree-p cochains:
///   (x1, x2, x3) -> (d_rho x1, d_theta x2, d x3 + s (phi o x1 - x2 <> phi))
/// with s given by `mixed_sign`.
template <typename Scalar>
Cochain<Scalar> big_delta(const Triple<Scalar> &t, const Cochain<Scalar> &c,
                          SignConvention conv = SignConvention::paper)
{
  if (c.source_dim() != t.source_dim() || c.target_dim() != t.target_dim())
    throw DimensionError("big_delta: cochain dimensions do not match the triple");
  const int p = c.degree();
  SkewMap<Scalar> mixed = compose(t.phi(), c.x1()) - diamond(c.x2(), t.phi());
  mixed *= Scalar(mixed_sign(p, conv));
  if (c.x3())
    mixed += delta_morphism(t, *c.x3());
  return Cochain<Scalar>(p + 1, delta_algebra(t.rho(), c.x1()), delta_algebra(t.theta(), c.x2()),
                         std::move(mixed));
}

/// Bracket on ^*(U, V) induced by theta, extended from decomposables
/// (w (x) v, pi (x) w) -> (w ^ pi) (x) theta(v, w) by the shuffle sum
///   [[f, g]](x_1..x_{p+q}) = sum_{(p,q)-shuffles s} sign(s) theta(f(x_s(1..p)), g(x_s(p+1..p+q))).
/// Graded by arity: [[f, g]] = -(-1)^{pq} [[g, f]].
template <typename Scalar>
SkewMap<Scalar> nr_bracket(const LieAlgebra<Scalar> &theta, const SkewMap<Scalar> &f,
                           const SkewMap<Scalar> &g)
{
  const int n = theta.dim();
  const int m = f.source_dim();
  if (g.source_dim() != m || f.target_dim() != n || g.target_dim() != n)
    throw DimensionError("nr_bracket: operands must share source and target with theta on the target");
  const int p = f.arity();
  const int q = g.arity();
  SkewMap<Scalar> out(p + q, m, n);
  if (out.num_tuples() == 0)
    return out;
  // shuffle = choice of positions for the first p arguments
  const auto choices = increasing_tuples(p + q, p);
  IndexTuple order(static_cast<std::size_t>(p + q));
  IndexTuple left(static_cast<std::size_t>(p)), right(static_cast<std::size_t>(q));
  Index col = 0;
  for (const auto &tuple : out.tuples()) {
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    for (const auto &pos : choices) {
      std::size_t li = 0, ri = 0;
      for (int k = 0; k < p + q; ++k) {
        if (li < pos.size() && pos[li] == k)
          left[li++] = tuple[static_cast<std::size_t>(k)];
        else
          right[ri++] = tuple[static_cast<std::size_t>(k)];
      }
      std::size_t o = 0;
      for (int k : pos)
        order[o++] = k;
      for (int k = 0, j = 0; k < p + q; ++k) {
        if (j < p && pos[static_cast<std::size_t>(j)] == k) {
          ++j;
          continue;
        }
        order[o++] = k;
      }
      const int sign = sort_with_sign(order);
      VectorX<Scalar> term = theta.bracket(f.coefficients().col(f.column_of(left)),
                                           g.coefficients().col(g.column_of(right)));
      if (sign > 0)
        v += term;
      else
        v -= term;
    }
    out.coefficients().col(col++) = v;
  }
  return out;
}

/// d psi - 1/2 [[psi, psi]] for a 1-form psi.
///
/// Satisfies morphism_defect(rho, theta, phi + psi) = morphism_defect(t) + mc_defect(t, psi)
/// exactly, so phi + psi is a morphism iff d psi = +1/2 [[psi, psi]] with this sign of d.
template <typename Scalar>
SkewMap<Scalar> mc_defect(const Triple<Scalar> &t, const SkewMap<Scalar> &psi)
{
  if (psi.arity() != 1)
    throw DimensionError("mc_defect: psi must be a linear map");
  SkewMap<Scalar> out = delta_morphism(t, psi);
  SkewMap<Scalar> quad = nr_bracket(t.theta(), psi, psi);
  quad *= Scalar(1) / Scalar(2);
  return out - quad;
}

} // namespace liedeform

#endif
