#include "liedeform/catalog.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace liedeform::catalog {

namespace {

QSkewMap bracket_from(int n, std::initializer_list<std::pair<std::array<int, 2>, QVector>> entries)
{
  QSkewMap br(2, n, n);
  for (const auto &[ij, v] : entries)
    br.set(ij, v);
  return br;
}

QVector vec(std::initializer_list<long> xs)
{
  QVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs)
    v(i++) = Rational(x);
  return v;
}

QMatrix mat(int rows, int cols, std::initializer_list<long> xs)
{
  if (xs.size() != static_cast<std::size_t>(rows * cols))
    throw std::logic_error("catalog: bad matrix literal");
  QMatrix m(rows, cols);
  auto it = xs.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Rational(*it++);
  return m;
}

class SpecParser
{
public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  QLieAlgebra parse_all()
  {
    auto a = parse();
    skip_ws();
    if (pos_ != s_.size())
      fail("trailing characters");
    return a;
  }

private:
  QLieAlgebra parse()
  {
    skip_ws();
    const std::string name = ident();
    if (name == "abelian") {
      expect('(');
      const int n = integer();
      expect(')');
      if (n > 64)
        fail("abelian dimension above 64");
      return abelian(n);
    }
    if (name == "direct_sum") {
      expect('(');
      auto a = parse();
      expect(',');
      auto b = parse();
      expect(')');
      return direct_sum(a, b);
    }
    if (name == "heisenberg3")
      return heisenberg3();
    if (name == "sl2")
      return sl2();
    if (name == "aff1")
      return aff1();
    fail("unknown algebra \"" + name + "\"");
  }

  std::string ident()
  {
    const auto start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected an algebra name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer()
  {
    skip_ws();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_ || pos_ - start > 6)
      fail("expected a small non-negative integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c)
  {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws()
  {
    while (pos_ < s_.size() && s_[pos_] == ' ')
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg) const
  {
    throw std::invalid_argument("catalog: " + msg + " in \"" + std::string(s_) + "\" at offset " +
                                std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace

QLieAlgebra abelian(int n)
{
  if (n < 0)
    throw std::invalid_argument("catalog: abelian dimension must be non-negative");
  return QLieAlgebra(n);
}

QLieAlgebra heisenberg3()
{
  return QLieAlgebra(bracket_from(3, {{{0, 1}, vec({0, 0, 1})}}));
}

QLieAlgebra sl2()
{
  return QLieAlgebra(bracket_from(3, {{{0, 1}, vec({0, 2, 0})}, {{0, 2}, vec({0, 0, -2})}, {{1, 2}, vec({1, 0, 0})}}));
}

QLieAlgebra aff1()
{
  return QLieAlgebra(bracket_from(2, {{{0, 1}, vec({0, 1})}}));
}

QLieAlgebra direct_sum(const QLieAlgebra &a, const QLieAlgebra &b)
{
  const int da = a.dim();
  const int n = da + b.dim();
  QSkewMap br(2, n, n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      QVector v = QVector::Zero(n);
      v.head(da) = a.bracket_basis(i, j);
      br.set(std::array<int, 2>{i, j}, v);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      QVector v = QVector::Zero(n);
      v.tail(b.dim()) = b.bracket_basis(i, j);
      br.set(std::array<int, 2>{da + i, da + j}, v);
    }
  return QLieAlgebra(std::move(br));
}

QLieAlgebra algebra(std::string_view spec)
{
  return SpecParser(spec).parse_all();
}

QTriple identity(const QLieAlgebra &a)
{
  return QTriple(a, a, QMatrix::Identity(a.dim(), a.dim()));
}

QTriple zero_morphism(const QLieAlgebra &source, const QLieAlgebra &target)
{
  return QTriple(source, target, QMatrix::Zero(target.dim(), source.dim()));
}

QTriple aff1_quotient()
{
  return QTriple(aff1(), abelian(1), mat(1, 2, {1, 0}));
}

std::vector<NamedTriple> standard_triples()
{
  std::vector<NamedTriple> out;
  out.push_back({"sl2/identity", identity(sl2())});
  out.push_back({"abelian(2)/identity", identity(abelian(2))});
  out.push_back({"aff1/quotient", aff1_quotient()});
  out.push_back({"heisenberg3/identity", identity(heisenberg3())});
  out.push_back({"sl2->abelian(2)/zero", zero_morphism(sl2(), abelian(2))});
  out.push_back({"direct_sum(aff1,abelian(1))/identity", identity(direct_sum(aff1(), abelian(1)))});
  out.push_back({"heisenberg3->aff1/zero", zero_morphism(heisenberg3(), aff1())});
  out.push_back({"sl2/identity/twisted",
                 act_triple(mat(3, 3, {1, 1, 0, 0, 1, 2, 1, 0, 1}), mat(3, 3, {2, 0, 1, 1, 1, 0, 0, 1, 1}),
                            identity(sl2()))});
  out.push_back({"aff1/quotient/twisted", act_triple(mat(2, 2, {1, 1, 0, 2}), mat(1, 1, {3}), aff1_quotient())});
  out.push_back({"heisenberg3/identity/twisted",
                 act_triple(mat(3, 3, {1, 0, 1, 1, 1, 0, 0, 0, 2}), mat(3, 3, {1, 2, 0, 0, 1, 0, 0, 1, 1}),
                            identity(heisenberg3()))});
  return out;
}

} // namespace liedeform::catalog
