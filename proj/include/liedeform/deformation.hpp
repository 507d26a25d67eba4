#ifndef LIEDEFORM_DEFORMATION_HPP
#define LIEDEFORM_DEFORMATION_HPP

// Formal (truncated polynomial) deformations of a triple (rho, theta, phi).
//
// A curve of order N is rho_t = rho + sum_{i=1..N} rho_i t^i and likewise for
// theta_t and phi_t. All constraints are compared coefficient by coefficient
// in t, so nothing beyond order N is ever looked at.

#include <array>
#include <optional>
#include <vector>

#include "liedeform/cohomology.hpp"

namespace liedeform {

template <typename Scalar>
class TruncatedCurve
{
public:
  TruncatedCurve(Triple<Scalar> base, std::vector<SkewMap<Scalar>> rho, std::vector<SkewMap<Scalar>> theta,
                 std::vector<SkewMap<Scalar>> phi)
      : base_(std::move(base)), rho_(std::move(rho)), theta_(std::move(theta)), phi_(std::move(phi))
  {
    if (rho_.size() != theta_.size() || rho_.size() != phi_.size())
      throw DimensionError("TruncatedCurve: coefficient lists must have equal length");
    const int m = base_.source_dim();
    const int n = base_.target_dim();
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (!rho_[i].same_shape(SkewMap<Scalar>(2, m, m)))
        throw DimensionError("TruncatedCurve: rho coefficient " + std::to_string(i + 1) + " has wrong shape");
      if (!theta_[i].same_shape(SkewMap<Scalar>(2, n, n)))
        throw DimensionError("TruncatedCurve: theta coefficient " + std::to_string(i + 1) + " has wrong shape");
      if (!phi_[i].same_shape(SkewMap<Scalar>(1, m, n)))
        throw DimensionError("TruncatedCurve: phi coefficient " + std::to_string(i + 1) + " has wrong shape");
    }
  }

  /// All higher coefficients zero.
  static TruncatedCurve constant(const Triple<Scalar> &base, int order)
  {
    const int m = base.source_dim();
    const int n = base.target_dim();
    const auto N = static_cast<std::size_t>(order);
    return TruncatedCurve(base, std::vector<SkewMap<Scalar>>(N, SkewMap<Scalar>(2, m, m)),
                          std::vector<SkewMap<Scalar>>(N, SkewMap<Scalar>(2, n, n)),
                          std::vector<SkewMap<Scalar>>(N, SkewMap<Scalar>(1, m, n)));
  }

  const Triple<Scalar> &base() const { return base_; }
  int order() const { return static_cast<int>(rho_.size()); }
  const std::vector<SkewMap<Scalar>> &rho_coeffs() const { return rho_; }
  const std::vector<SkewMap<Scalar>> &theta_coeffs() const { return theta_; }
  const std::vector<SkewMap<Scalar>> &phi_coeffs() const { return phi_; }

  /// Coefficient of t^i, i = 0 being the base point.
  const SkewMap<Scalar> &rho(int i) const
  {
    return i == 0 ? base_.rho().bracket_map() : rho_.at(static_cast<std::size_t>(i - 1));
  }
  const SkewMap<Scalar> &theta(int i) const
  {
    return i == 0 ? base_.theta().bracket_map() : theta_.at(static_cast<std::size_t>(i - 1));
  }
  const MatrixX<Scalar> &phi(int i) const
  {
    return i == 0 ? base_.phi() : phi_.at(static_cast<std::size_t>(i - 1)).coefficients();
  }

  /// (rho_i, theta_i, phi_i) as a degree-1 cochain, i >= 1.
  Cochain<Scalar> coefficient(int i) const
  {
    if (i < 1 || i > order())
      throw DimensionError("TruncatedCurve::coefficient: order out of range");
    const auto k = static_cast<std::size_t>(i - 1);
    return Cochain<Scalar>(1, rho_[k], theta_[k], phi_[k]);
  }

  /// Copy with one more order appended.
  TruncatedCurve extended(const Cochain<Scalar> &next) const
  {
    if (next.degree() != 1)
      throw DimensionError("TruncatedCurve::extended: coefficients must form a degree-1 cochain");
    TruncatedCurve c = *this;
    c.rho_.push_back(next.x1());
    c.theta_.push_back(next.x2());
    c.phi_.push_back(*next.x3());
    return c;
  }

private:
  Triple<Scalar> base_;
  std::vector<SkewMap<Scalar>> rho_;
  std::vector<SkewMap<Scalar>> theta_;
  std::vector<SkewMap<Scalar>> phi_;
};

/// Coefficient of t^n in each constraint: Jacobi for rho_t, Jacobi for
/// theta_t, and the fiber condition phi_t(rho_t(a,b)) - theta_t(phi_t a, phi_t b).
template <typename Scalar>
struct OrderDefects
{
  int order = 0;
  SkewMap<Scalar> jacobi_rho;
  SkewMap<Scalar> jacobi_theta;
  SkewMap<Scalar> fiber;

  bool vanishes() const { return jacobi_rho.is_zero() && jacobi_theta.is_zero() && fiber.is_zero(); }
  Cochain<Scalar> as_cochain() const { return Cochain<Scalar>(2, jacobi_rho, jacobi_theta, fiber); }
};

template <typename Scalar>
OrderDefects<Scalar> defects_at(const TruncatedCurve<Scalar> &c, int n)
{
  const int m = c.base().source_dim();
  const int dv = c.base().target_dim();
  OrderDefects<Scalar> d{n, SkewMap<Scalar>(3, m, m), SkewMap<Scalar>(3, dv, dv), SkewMap<Scalar>(2, m, dv)};
  for (int i = 0; i <= n; ++i) {
    d.jacobi_rho += jacobi_pair(c.rho(i), c.rho(n - i));
    d.jacobi_theta += jacobi_pair(c.theta(i), c.theta(n - i));
    d.fiber += compose(c.phi(i), c.rho(n - i));
  }
  Index col = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b, ++col)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
          const int k = n - i - j;
          d.fiber.coefficients().col(col) -= c.theta(i).eval2(c.phi(j).col(a), c.phi(k).col(b));
        }
  return d;
}

/// Defect table for t-degrees 1..N.
template <typename Scalar>
std::vector<OrderDefects<Scalar>> curve_defects(const TruncatedCurve<Scalar> &c)
{
  std::vector<OrderDefects<Scalar>> out;
  for (int n = 1; n <= c.order(); ++n)
    out.push_back(defects_at(c, n));
  return out;
}

template <typename Scalar>
bool in_bundle_to_order(const TruncatedCurve<Scalar> &c, int order)
{
  for (int n = 1; n <= order; ++n)
    if (!defects_at(c, n).vanishes())
      return false;
  return true;
}

template <typename Scalar>
Cochain<Scalar> first_order(const TruncatedCurve<Scalar> &c)
{
  return c.coefficient(1);
}

/// Orbit of the base triple under g(t) = id + tA, h(t) = id + tB, expanded to
/// order N. Inverses are Neumann series sum_i (-tA)^i.
template <typename Scalar>
TruncatedCurve<Scalar> trivial_deformation(const Triple<Scalar> &t, const MatrixX<Scalar> &a,
                                           const MatrixX<Scalar> &b, int order)
{
  const int m = t.source_dim();
  const int n = t.target_dim();
  if (a.rows() != m || a.cols() != m || b.rows() != n || b.cols() != n)
    throw DimensionError("trivial_deformation: generators have wrong shape");
  if (order < 0)
    throw DimensionError("trivial_deformation: negative order");

  // Pulled-back bracket of id + tA, split by powers of t:
  // rho(a,b), rho(Aa,b) + rho(a,Ab), rho(Aa,Ab).
  auto pullback_pieces = [](const SkewMap<Scalar> &br, const MatrixX<Scalar> &gen) {
    const auto dim = gen.rows();
    const MatrixX<Scalar> id = MatrixX<Scalar>::Identity(dim, dim);
    SkewMap<Scalar> quad = diamond(br, gen);
    SkewMap<Scalar> lin = diamond(br, MatrixX<Scalar>(id + gen)) - br - quad;
    return std::array<SkewMap<Scalar>, 3>{br, lin, quad};
  };
  auto neumann = [order](const MatrixX<Scalar> &gen) {
    std::vector<MatrixX<Scalar>> pw{MatrixX<Scalar>::Identity(gen.rows(), gen.cols())};
    for (int i = 1; i <= order; ++i)
      pw.push_back(-gen * pw.back());
    return pw;
  };

  const auto rho_pieces = pullback_pieces(t.rho().bracket_map(), a);
  const auto theta_pieces = pullback_pieces(t.theta().bracket_map(), b);
  const auto ainv = neumann(a);
  const auto binv = neumann(b);

  std::vector<SkewMap<Scalar>> rho, theta, phi;
  for (int k = 1; k <= order; ++k) {
    SkewMap<Scalar> r(2, m, m), th(2, n, n);
    for (int j = 0; j <= std::min(2, k); ++j) {
      r += compose(ainv[static_cast<std::size_t>(k - j)], rho_pieces[static_cast<std::size_t>(j)]);
      th += compose(binv[static_cast<std::size_t>(k - j)], theta_pieces[static_cast<std::size_t>(j)]);
    }
    MatrixX<Scalar> p = binv[static_cast<std::size_t>(k)] * t.phi() +
                        binv[static_cast<std::size_t>(k - 1)] * t.phi() * a;
    rho.push_back(std::move(r));
    theta.push_back(std::move(th));
    phi.push_back(SkewMap<Scalar>::from_linear(p));
  }
  return TruncatedCurve<Scalar>(t, std::move(rho), std::move(theta), std::move(phi));
}

// ---------------------------------------------------------------------------
// Deformation-equation identity
// ---------------------------------------------------------------------------

/// How the two theta-tail terms of the cubic right-hand side are read.
/// `phi_t` keeps phi_t in them; `base_phi` replaces it by the base phi,
/// which removes a triple count of theta~(phi~ a, phi~ b).
enum class RhsReading { phi_t, base_phi };

/// Index range of the inner j-sum in the explicit order-n formula.
/// `from_zero` is j = 0..n-i with phi_0 = phi; `interior` is j = 1..n-i-1.
enum class InnerRange { from_zero, interior };

/// Per-order values of the three sides of the deformation equation.
template <typename Scalar>
struct IdentityOrder
{
  int order = 0;
  /// Third component of the combined differential on (rho_n, theta_n, phi_n).
  SkewMap<Scalar> lhs_paper;
  SkewMap<Scalar> lhs_geometric;
  /// t^n coefficient of the cubic right-hand side built from the tails.
  SkewMap<Scalar> rhs_phi_t;
  SkewMap<Scalar> rhs_base_phi;
  /// The explicit double sum over i and j.
  SkewMap<Scalar> sum_from_zero;
  SkewMap<Scalar> sum_interior;

  const SkewMap<Scalar> &lhs(SignConvention c) const
  {
    return c == SignConvention::paper ? lhs_paper : lhs_geometric;
  }
  const SkewMap<Scalar> &rhs(RhsReading r) const { return r == RhsReading::phi_t ? rhs_phi_t : rhs_base_phi; }
  const SkewMap<Scalar> &sum(InnerRange r) const { return r == InnerRange::from_zero ? sum_from_zero : sum_interior; }
};

struct IdentityReading
{
  SignConvention convention;
  int sign; // lhs == sign * rhs == sign * sum
  RhsReading rhs;
  InnerRange range;

  friend bool operator==(const IdentityReading &, const IdentityReading &) = default;
};

inline std::vector<IdentityReading> all_identity_readings()
{
  std::vector<IdentityReading> out;
  for (auto c : {SignConvention::paper, SignConvention::geometric})
    for (int s : {1, -1})
      for (auto r : {RhsReading::phi_t, RhsReading::base_phi})
        for (auto g : {InnerRange::from_zero, InnerRange::interior})
          out.push_back({c, s, r, g});
  return out;
}

template <typename Scalar>
bool holds(const IdentityOrder<Scalar> &row, const IdentityReading &r)
{
  const auto &l = row.lhs(r.convention);
  const Scalar s(r.sign);
  return l == s * row.rhs(r.rhs) && l == s * row.sum(r.range);
}

namespace detail {

template <typename T>
using Series = std::vector<T>; // index = power of t

/// sum_{i+j+k=n} theta_i(u_j, v_k) for one n.
template <typename Scalar>
VectorX<Scalar> bracket_coeff(const Series<SkewMap<Scalar>> &theta, const Series<VectorX<Scalar>> &u,
                              const Series<VectorX<Scalar>> &v, int n)
{
  VectorX<Scalar> out = VectorX<Scalar>::Zero(theta.front().target_dim());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      out += theta[static_cast<std::size_t>(i)].eval2(u[static_cast<std::size_t>(j)],
                                                      v[static_cast<std::size_t>(n - i - j)]);
  return out;
}

template <typename Scalar>
VectorX<Scalar> apply_coeff(const Series<MatrixX<Scalar>> &f, const Series<VectorX<Scalar>> &x, int n)
{
  VectorX<Scalar> out = VectorX<Scalar>::Zero(f.front().rows());
  for (int i = 0; i <= n; ++i)
    out += f[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(n - i)];
  return out;
}

} // namespace detail

/// Compares, order by order, the combined differential of the n-th
/// coefficients against the cubic right-hand side (from the tails
/// rho~ = rho_t - rho, theta~, phi~) and against the explicit double sum.
template <typename Scalar>
std::vector<IdentityOrder<Scalar>> deformation_identity_report(const TruncatedCurve<Scalar> &c)
{
  using detail::Series;
  const int N = c.order();
  const int m = c.base().source_dim();
  const int dv = c.base().target_dim();
  const auto len = static_cast<std::size_t>(N + 1);

  // series objects: full and tail
  Series<SkewMap<Scalar>> theta_full(len), theta_tail(len);
  Series<MatrixX<Scalar>> phi_tail(len);
  for (int i = 0; i <= N; ++i) {
    const auto k = static_cast<std::size_t>(i);
    theta_full[k] = c.theta(i);
    theta_tail[k] = i == 0 ? SkewMap<Scalar>(2, dv, dv) : c.theta(i);
    phi_tail[k] = i == 0 ? MatrixX<Scalar>(MatrixX<Scalar>::Zero(dv, m)) : c.phi(i);
  }
  auto column_series = [&](int a, bool tail) {
    Series<VectorX<Scalar>> s(len);
    for (int i = 0; i <= N; ++i)
      s[static_cast<std::size_t>(i)] = (tail && i == 0) ? VectorX<Scalar>(VectorX<Scalar>::Zero(dv))
                                                         : VectorX<Scalar>(c.phi(i).col(a));
    return s;
  };
  Series<VectorX<Scalar>> phi0_series(len, VectorX<Scalar>::Zero(dv));

  std::vector<IdentityOrder<Scalar>> out;
  for (int n = 1; n <= N; ++n) {
    IdentityOrder<Scalar> row;
    row.order = n;
    const auto cn = c.coefficient(n);
    row.lhs_paper = *big_delta(c.base(), cn, SignConvention::paper).x3();
    row.lhs_geometric = *big_delta(c.base(), cn, SignConvention::geometric).x3();
    row.rhs_phi_t = SkewMap<Scalar>(2, m, dv);
    row.rhs_base_phi = SkewMap<Scalar>(2, m, dv);
    row.sum_from_zero = SkewMap<Scalar>(2, m, dv);
    row.sum_interior = SkewMap<Scalar>(2, m, dv);

    Index col = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b, ++col) {
        // right-hand side via series products
        const auto pa_tail = column_series(a, true);
        const auto pb_tail = column_series(b, true);
        const auto pa_full = column_series(a, false);
        const auto pb_full = column_series(b, false);
        auto pa_base = phi0_series, pb_base = phi0_series;
        pa_base[0] = c.phi(0).col(a);
        pb_base[0] = c.phi(0).col(b);
        Series<VectorX<Scalar>> rho_tail_ab(len, VectorX<Scalar>::Zero(m));
        for (int i = 1; i <= N; ++i) {
          const std::array<int, 2> ab{a, b};
          rho_tail_ab[static_cast<std::size_t>(i)] = c.rho(i).eval_basis(ab);
        }
        const VectorX<Scalar> common = -detail::apply_coeff(phi_tail, rho_tail_ab, n) +
                                       detail::bracket_coeff(theta_full, pa_tail, pb_tail, n);
        row.rhs_phi_t.coefficients().col(col) = common +
                                                  detail::bracket_coeff(theta_tail, pa_full, pb_tail, n) +
                                                  detail::bracket_coeff(theta_tail, pa_tail, pb_full, n);
        row.rhs_base_phi.coefficients().col(col) = common +
                                                   detail::bracket_coeff(theta_tail, pa_base, pb_tail, n) +
                                                   detail::bracket_coeff(theta_tail, pa_tail, pb_base, n);

        // explicit double sum
        VectorX<Scalar> verb = VectorX<Scalar>::Zero(dv), inter = VectorX<Scalar>::Zero(dv);
        const std::array<int, 2> ab{a, b};
        for (int i = 1; i <= n - 1; ++i) {
          VectorX<Scalar> head = -(c.phi(i) * c.rho(n - i).eval_basis(ab)) +
                                 c.theta(0).eval2(c.phi(i).col(a), c.phi(n - i).col(b));
          verb += head;
          inter += head;
          for (int j = 0; j <= n - i; ++j) {
            VectorX<Scalar> term = c.theta(i).eval2(c.phi(j).col(a), c.phi(n - i - j).col(b));
            verb += term;
            if (j >= 1 && j <= n - i - 1)
              inter += term;
          }
        }
        row.sum_from_zero.coefficients().col(col) = verb;
        row.sum_interior.coefficients().col(col) = inter;
      }
    out.push_back(std::move(row));
  }
  return out;
}

/// Readings under which lhs, rhs and the explicit sum agree at every order.
template <typename Scalar>
std::vector<IdentityReading> agreeing_readings(const std::vector<IdentityOrder<Scalar>> &report)
{
  std::vector<IdentityReading> out;
  for (const auto &r : all_identity_readings()) {
    bool ok = true;
    for (const auto &row : report)
      ok = ok && holds(row, r);
    if (ok)
      out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Order-by-order extension
// ---------------------------------------------------------------------------

template <typename Scalar>
struct ObstructionReport
{
  int order = 0;
  bool solvable = false;
  /// n-th coefficients (rho_n, theta_n, phi_n) when solvable.
  std::optional<Cochain<Scalar>> solution;
  std::optional<TruncatedCurve<Scalar>> extended;
  /// Kernel of the geometric degree-1 differential: the freedom in the solution.
  std::vector<Cochain<Scalar>> freedom;
  /// Order-n defect left by a zero n-th coefficient; it lies outside the image
  /// of the degree-1 differential when unsolvable.
  std::optional<Cochain<Scalar>> obstruction;
  VectorX<Scalar> obstruction_vector;
  std::optional<bool> obstruction_is_cocycle;
};

/// Solves for the next coefficients of a curve that lies in the bundle
/// through its current order N. The order-(N+1) constraints are affine in the
/// unknowns with linear part the geometric degree-1 differential, so this is
/// one call to solve_affine.
template <typename Scalar>
ObstructionReport<Scalar> extend_deformation(const TruncatedCurve<Scalar> &c)
{
  const int N = c.order();
  for (int n = 1; n <= N; ++n)
    if (!defects_at(c, n).vanishes())
      throw PreconditionError("extend_deformation: curve violates the constraints at order " + std::to_string(n));
  const auto &t = c.base();
  const int m = t.source_dim();
  const int dv = t.target_dim();

  const auto padded = c.extended(Cochain<Scalar>::zero(1, m, dv));
  const Cochain<Scalar> quad = defects_at(padded, N + 1).as_cochain();

  ObstructionReport<Scalar> r;
  r.order = N + 1;
  const auto mat = delta_matrix(t, 1, SignConvention::geometric);
  const auto sol = solve_affine(mat, VectorX<Scalar>(-flatten(quad)));
  if (sol) {
    r.solvable = true;
    r.solution = unflatten(1, m, dv, sol->particular);
    r.extended = c.extended(*r.solution);
    for (const auto &k : sol->kernel)
      r.freedom.push_back(unflatten(1, m, dv, k));
  } else {
    for (const auto &k : nullspace(mat))
      r.freedom.push_back(unflatten(1, m, dv, k));
    r.obstruction = quad;
    r.obstruction_vector = flatten(quad);
    r.obstruction_is_cocycle = is_cocycle(t, quad, SignConvention::geometric);
  }
  return r;
}

} // namespace liedeform

#endif
