#ifndef LIEDEFORM_SKEW_MAP_HPP
#define LIEDEFORM_SKEW_MAP_HPP

#include <span>
#include <string>
#include <vector>

#include "liedeform/combinatorics.hpp"
#include "liedeform/errors.hpp"
#include "liedeform/linalg.hpp"

namespace liedeform {

/// Alternating p-linear map from a source space of dimension n to a target
/// space of dimension m, p >= 1.
///
/// Coefficients are a dense m x C(n, p) matrix: column k is the value on the
/// k-th strictly increasing index tuple in lexicographic order. Column-major
/// storage therefore lists coefficients tuple by tuple, target index fastest.
/// When p > n there are no tuples and the map is identically zero.
///
/// Arity 0 is rejected: the only place it would arise is the degree-0 mixed
/// component of the deformation complex, which is zero by convention.
template <typename Scalar>
class SkewMap
{
public:
  using Matrix = MatrixX<Scalar>;
  using Vector = VectorX<Scalar>;

  SkewMap() : SkewMap(1, 0, 0) {}

  SkewMap(int arity, int source_dim, int target_dim)
      : arity_(arity), source_dim_(source_dim)
  {
    check_shape(arity, source_dim, target_dim);
    coeffs_ = Matrix::Zero(target_dim, static_cast<Index>(binomial(source_dim, arity)));
  }

  SkewMap(int arity, int source_dim, Matrix coeffs)
      : arity_(arity), source_dim_(source_dim), coeffs_(std::move(coeffs))
  {
    check_shape(arity, source_dim, static_cast<int>(coeffs_.rows()));
    if (coeffs_.cols() != static_cast<Index>(binomial(source_dim, arity)))
      throw DimensionError("SkewMap: coefficient matrix has " + std::to_string(coeffs_.cols()) +
                           " columns, expected C(" + std::to_string(source_dim) + "," +
                           std::to_string(arity) + ")");
  }

  /// A linear map viewed as an alternating 1-form.
  static SkewMap from_linear(const Matrix &m)
  {
    return SkewMap(1, static_cast<int>(m.cols()), m);
  }

  int arity() const { return arity_; }
  int source_dim() const { return source_dim_; }
  int target_dim() const { return static_cast<int>(coeffs_.rows()); }
  Index num_tuples() const { return coeffs_.cols(); }

  const Matrix &coefficients() const { return coeffs_; }
  Matrix &coefficients() { return coeffs_; }

  /// Tuples in column order.
  std::vector<IndexTuple> tuples() const { return increasing_tuples(source_dim_, arity_); }

  Index column_of(std::span<const int> sorted) const
  {
    return static_cast<Index>(tuple_rank(sorted, source_dim_));
  }

  /// Value on basis vectors given in any order; alternation supplies the sign.
  Vector eval_basis(std::span<const int> idx) const
  {
    check_arity(idx.size());
    IndexTuple t(idx.begin(), idx.end());
    for (int i : t)
      check_index(i);
    const int s = sort_with_sign(t);
    if (s == 0)
      return Vector::Zero(target_dim());
    Vector v = coeffs_.col(column_of(t));
    if (s < 0)
      v = -v;
    return v;
  }

  /// Sets the value on basis vectors in any order (the stored coefficient is
  /// sign-adjusted). Repeated indices are rejected.
  void set(std::span<const int> idx, const Vector &value)
  {
    check_arity(idx.size());
    if (value.size() != coeffs_.rows())
      throw DimensionError("SkewMap::set: value has wrong length");
    IndexTuple t(idx.begin(), idx.end());
    for (int i : t)
      check_index(i);
    const int s = sort_with_sign(t);
    if (s == 0)
      throw DimensionError("SkewMap::set: repeated index");
    coeffs_.col(column_of(t)) = s > 0 ? value : Vector(-value);
  }

  /// f(v, e_{rest...}): first argument arbitrary, remaining ones basis vectors.
  Vector eval_first(const Vector &v, std::span<const int> rest) const
  {
    check_arity(rest.size() + 1);
    if (v.size() != source_dim_)
      throw DimensionError("SkewMap::eval_first: argument has wrong length");
    Vector out = Vector::Zero(target_dim());
    IndexTuple t(rest.size() + 1);
    for (Index k = 0; k < v.size(); ++k) {
      if (v(k) == Scalar(0))
        continue;
      t[0] = static_cast<int>(k);
      std::copy(rest.begin(), rest.end(), t.begin() + 1);
      const int s = sort_with_sign(t);
      if (s == 0)
        continue;
      const Scalar c = s > 0 ? v(k) : Scalar(-v(k));
      out += c * coeffs_.col(column_of(t));
    }
    return out;
  }

  /// Evaluation on arbitrary vectors: sum over tuples I of coefficient_I
  /// times the I-rows minor of the argument matrix.
  Vector eval(const std::vector<Vector> &args) const
  {
    check_arity(args.size());
    Matrix x(source_dim_, arity_);
    for (int j = 0; j < arity_; ++j) {
      if (args[static_cast<std::size_t>(j)].size() != source_dim_)
        throw DimensionError("SkewMap::eval: argument has wrong length");
      x.col(j) = args[static_cast<std::size_t>(j)];
    }
    if (arity_ == 1)
      return coeffs_ * x.col(0);
    Vector out = Vector::Zero(target_dim());
    const auto ts = tuples();
    Matrix sub(arity_, arity_);
    for (std::size_t c = 0; c < ts.size(); ++c) {
      for (int r = 0; r < arity_; ++r)
        sub.row(r) = x.row(ts[c][static_cast<std::size_t>(r)]);
      const Scalar d = determinant(sub);
      if (d != Scalar(0))
        out += d * coeffs_.col(static_cast<Index>(c));
    }
    return out;
  }

  /// Bilinear evaluation for arity 2, (u, v) -> sum_{a<b} c_ab (u_a v_b - u_b v_a).
  Vector eval2(const Vector &u, const Vector &v) const
  {
    if (arity_ != 2)
      throw DimensionError("SkewMap::eval2 requires arity 2");
    if (u.size() != source_dim_ || v.size() != source_dim_)
      throw DimensionError("SkewMap::eval2: argument has wrong length");
    Vector out = Vector::Zero(target_dim());
    Index col = 0;
    for (int a = 0; a < source_dim_; ++a)
      for (int b = a + 1; b < source_dim_; ++b, ++col) {
        const Scalar w = u(a) * v(b) - u(b) * v(a);
        if (w != Scalar(0))
          out += w * coeffs_.col(col);
      }
    return out;
  }

  bool is_zero() const { return liedeform::is_zero(coeffs_); }

  bool same_shape(const SkewMap &o) const
  {
    return arity_ == o.arity_ && source_dim_ == o.source_dim_ && target_dim() == o.target_dim();
  }

  SkewMap &operator+=(const SkewMap &o)
  {
    require_same_shape(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  SkewMap &operator-=(const SkewMap &o)
  {
    require_same_shape(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  SkewMap &operator*=(const Scalar &s)
  {
    coeffs_ *= s;
    return *this;
  }

  friend SkewMap operator+(SkewMap a, const SkewMap &b) { return a += b; }
  friend SkewMap operator-(SkewMap a, const SkewMap &b) { return a -= b; }
  friend SkewMap operator-(SkewMap a) { return a *= Scalar(-1); }
  friend SkewMap operator*(const Scalar &s, SkewMap a) { return a *= s; }
  friend bool operator==(const SkewMap &a, const SkewMap &b)
  {
    return a.same_shape(b) && a.coeffs_ == b.coeffs_;
  }

private:
  static void check_shape(int arity, int source_dim, int target_dim)
  {
    if (arity < 1)
      throw DimensionError("SkewMap: arity must be at least 1 (arity-0 mixed maps are zero by convention)");
    if (source_dim < 0 || target_dim < 0)
      throw DimensionError("SkewMap: negative dimension");
  }
  void check_arity(std::size_t n) const
  {
    if (n != static_cast<std::size_t>(arity_))
      throw DimensionError("SkewMap: expected " + std::to_string(arity_) + " arguments, got " +
                           std::to_string(n));
  }
  void check_index(int i) const
  {
    if (i < 0 || i >= source_dim_)
      throw DimensionError("SkewMap: basis index out of range");
  }
  void require_same_shape(const SkewMap &o) const
  {
    if (!same_shape(o))
      throw DimensionError("SkewMap: shape mismatch");
  }

  int arity_;
  int source_dim_;
  Matrix coeffs_;
};

/// p-th compound matrix: entry (J, I) is the minor of m on rows J, columns I.
template <typename Derived>
MatrixX<typename Derived::Scalar> compound_matrix(const Eigen::MatrixBase<Derived> &m, int p)
{
  using Scalar = typename Derived::Scalar;
  const auto rows = increasing_tuples(static_cast<int>(m.rows()), p);
  const auto cols = increasing_tuples(static_cast<int>(m.cols()), p);
  MatrixX<Scalar> out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  MatrixX<Scalar> sub(p, p);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c)
          sub(r, c) = m(rows[i][static_cast<std::size_t>(r)], cols[j][static_cast<std::size_t>(c)]);
      out(static_cast<Index>(i), static_cast<Index>(j)) = determinant(sub);
    }
  return out;
}

/// Phi o X: post-composition with a linear map.
template <typename Scalar>
SkewMap<Scalar> compose(const MatrixX<Scalar> &phi, const SkewMap<Scalar> &x)
{
  if (phi.cols() != x.target_dim())
    throw DimensionError("compose: linear map source does not match skew map target");
  return SkewMap<Scalar>(x.arity(), x.source_dim(), phi * x.coefficients());
}

/// lambda <> Phi: (x_1..x_p) -> lambda(Phi x_1, ..., Phi x_p).
template <typename Scalar>
SkewMap<Scalar> diamond(const SkewMap<Scalar> &lambda, const MatrixX<Scalar> &phi)
{
  if (phi.rows() != lambda.source_dim())
    throw DimensionError("diamond: linear map target does not match skew map source");
  const int p = lambda.arity();
  return SkewMap<Scalar>(p, static_cast<int>(phi.cols()),
                         lambda.coefficients() * compound_matrix(phi, p));
}

} // namespace liedeform

#endif
