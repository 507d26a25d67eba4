#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "liedeform/linalg.hpp"
#include "support/random.hpp"

using namespace liedeform;
using liedeform::testing::Random;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows)
{
  QMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto &r : rows) {
    Index j = 0;
    for (long v : r)
      m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

// Textbook Gauss-Jordan that records each elementary operation, then replays
// the operations on the identity. Pivot choice differs from the library's
// (last nonzero row instead of first); uniqueness of the reduced form means
// both must land on the same matrix.
struct Replay
{
  QMatrix reduced;
  QMatrix transform;
  std::vector<Index> pivots;
};

Replay oracle_rref(const QMatrix &m)
{
  struct Op
  {
    int kind; // 0 swap, 1 scale, 2 add multiple
    Index a, b;
    Rational s;
  };
  std::vector<Op> ops;
  QMatrix r = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index pick = -1;
    for (Index i = r.rows() - 1; i >= row; --i)
      if (!r(i, col).is_zero()) {
        pick = i;
        break;
      }
    if (pick < 0)
      continue;
    if (pick != row) {
      r.row(pick).swap(r.row(row));
      ops.push_back({0, pick, row, Rational(0)});
    }
    const Rational inv = Rational(1) / r(row, col);
    r.row(row) *= inv;
    ops.push_back({1, row, row, inv});
    for (Index i = 0; i < r.rows(); ++i)
      if (i != row && !r(i, col).is_zero()) {
        const Rational f = -r(i, col);
        r.row(i) += f * r.row(row);
        ops.push_back({2, i, row, f});
      }
    pivots.push_back(col);
    ++row;
  }
  QMatrix e = QMatrix::Identity(m.rows(), m.rows());
  for (const auto &op : ops) {
    if (op.kind == 0)
      e.row(op.a).swap(e.row(op.b));
    else if (op.kind == 1)
      e.row(op.a) *= op.s;
    else
      e.row(op.a) += op.s * e.row(op.b);
  }
  return {r, e, pivots};
}

Rational leibniz(const QMatrix &m)
{
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        inversions += perm[i] > perm[j];
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i)
      term *= m(static_cast<Index>(i), perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

} // namespace

TEST_CASE("rational: canonical form and text")
{
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").is_zero());
  CHECK(Rational(-3, 7).denominator() > 0);
  for (const char *bad : {"", "-", "1/", "/2", "1/-2", "1.5", "a", "1/0", "--1", "+1"})
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational: arithmetic is exact")
{
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  Rational sum(0);
  for (int k = 1; k <= 50; ++k)
    sum += Rational(1, k * (k + 1));
  CHECK(sum == Rational(50, 51));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
}

TEST_CASE("rref: examples")
{
  auto id = rref(mat({{1, 0}, {0, 1}}));
  CHECK(id.reduced == mat({{1, 0}, {0, 1}}));
  CHECK(id.pivots == std::vector<Index>{0, 1});

  auto r = rref(mat({{1, 2}, {2, 4}}));
  CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<Index>{0});
}

TEST_CASE("rref: agrees with replayed elementary operations")
{
  Random rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = trial == 0 ? 5 : rng.integer(1, 6);
    const int cols = trial == 0 ? 8 : rng.integer(1, 8);
    const QMatrix m = rng.matrix(rows, cols);
    const auto lib = rref(m);
    const auto ora = oracle_rref(m);
    CHECK(ora.reduced == ora.transform * m);
    CHECK(lib.reduced == ora.reduced);
    CHECK(lib.pivots == ora.pivots);
    CHECK_FALSE(determinant(ora.transform).is_zero());
  }
}

TEST_CASE("rank: examples and bounds")
{
  CHECK(rank(QMatrix::Zero(3, 7).eval()) == 0);
  CHECK(rank(QMatrix::Identity(4, 4).eval()) == 4);
  Random rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const QMatrix m = rng.matrix(rng.integer(1, 5), rng.integer(1, 5));
    CHECK(rank(m) <= std::min(m.rows(), m.cols()));
    CHECK(rank(m) == rank(QMatrix(m.transpose())));
  }
}

TEST_CASE("nullspace: examples")
{
  CHECK(nullspace(QMatrix::Identity(3, 3).eval()).empty());
  CHECK(nullspace(QMatrix::Zero(2, 3).eval()).size() == 3);
  const QMatrix m = mat({{1, 1, 0}});
  const auto k = nullspace(m);
  REQUIRE(k.size() == 2);
  for (const auto &v : k)
    CHECK(is_zero(m * v));
}

TEST_CASE("solve_affine: examples")
{
  Random rng(13);
  const QVector b = rng.vector(3);
  auto s = solve_affine(QMatrix::Identity(3, 3).eval(), b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK(s->kernel.empty());

  QVector one = QVector::Zero(2);
  one(0) = Rational(1);
  CHECK_FALSE(solve_affine(QMatrix::Zero(2, 2).eval(), one));

  const QMatrix m = mat({{1, 2}, {2, 4}});
  QVector rhs(2);
  rhs << Rational(1), Rational(2);
  auto t = solve_affine(m, rhs);
  REQUIRE(t);
  QVector expect(2);
  expect << Rational(1), Rational(0);
  CHECK(t->particular == expect);
  CHECK(m * t->particular == rhs);
  REQUIRE(t->kernel.size() == 1);
  QVector dir(2);
  dir << Rational(-2), Rational(1);
  CHECK(t->kernel[0] == dir);

  CHECK_THROWS(solve_affine(m, QVector::Zero(3).eval()));
}

TEST_CASE("linalg properties on random matrices")
{
  Random rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = rng.integer(1, 6);
    const int cols = rng.integer(1, 6);
    QMatrix m = rng.matrix(rows, cols);
    if (trial % 3 == 0 && rows > 1) // force dependent rows
      m.row(rows - 1) = m.row(0) * Rational(3, 2);
    const auto k = nullspace(m);
    CHECK(rank(m) + static_cast<Index>(k.size()) == cols);
    for (const auto &v : k)
      CHECK(is_zero(m * v));
    const auto once = rref(m).reduced;
    CHECK(rref(once).reduced == once);

    // b in the image half the time
    QVector b = trial % 2 ? QVector(m * rng.vector(cols)) : rng.vector(rows);
    QMatrix aug(rows, cols + 1);
    aug << m, b;
    const auto s = solve_affine(m, b);
    CHECK(s.has_value() == (rank(m) == rank(aug)));
    if (s)
      CHECK(m * s->particular == b);
  }
}

TEST_CASE("determinant and inverse")
{
  Random rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.integer(1, 5);
    const QMatrix m = rng.matrix(n, n);
    CHECK(determinant(m) == leibniz(m));
    if (!determinant(m).is_zero()) {
      CHECK(inverse(m) * m == QMatrix::Identity(n, n));
    } else {
      CHECK_THROWS_AS(inverse(m), std::domain_error);
    }
  }
  CHECK(determinant(mat({{1, 2}, {2, 4}})).is_zero());
}
