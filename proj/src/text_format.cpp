#include "liedeform/text_format.hpp"

#include <sstream>

namespace liedeform::text {

std::string format(const QSkewMap &x, const std::string &src, const std::string &tgt)
{
  std::ostringstream os;
  bool first = true;
  const auto tuples = x.tuples();
  for (std::size_t k = 0; k < tuples.size(); ++k)
    for (Index r = 0; r < x.coefficients().rows(); ++r) {
      Rational c = x.coefficients()(r, static_cast<Index>(k));
      if (c.is_zero())
        continue;
      if (first)
        os << (c.sign() < 0 ? "-" : "");
      else
        os << (c.sign() < 0 ? " - " : " + ");
      first = false;
      c = abs(c);
      if (c != Rational(1))
        os << c << ' ';
      for (std::size_t i = 0; i < tuples[k].size(); ++i)
        os << (i ? "^" : "") << src << tuples[k][i] + 1;
      os << " ⊗ " << tgt << r + 1;
    }
  return first ? "0" : os.str();
}

std::string format(const QVector &v, const std::string &basis)
{
  std::ostringstream os;
  bool first = true;
  for (Index r = 0; r < v.size(); ++r) {
    Rational c = v(r);
    if (c.is_zero())
      continue;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    c = abs(c);
    if (c != Rational(1))
      os << c << ' ';
    os << basis << r + 1;
  }
  return first ? "0" : os.str();
}

std::string format(const QLieAlgebra &a, const std::string &basis)
{
  std::ostringstream os;
  os << "dim " << a.dim() << '\n';
  bool any = false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      const QVector v = a.bracket_basis(i, j);
      if (is_zero(v))
        continue;
      any = true;
      os << "  [" << basis << i + 1 << ", " << basis << j + 1 << "] = " << format(v, basis) << '\n';
    }
  if (!any)
    os << "  abelian\n";
  return os.str();
}

std::string format(const QCochain &c)
{
  std::ostringstream os;
  os << "degree " << c.degree() << '\n';
  os << "  x1 = " << format(c.x1(), "e", "e") << '\n';
  os << "  x2 = " << format(c.x2(), "f", "f") << '\n';
  os << "  x3 = " << (c.x3() ? format(*c.x3(), "e", "f") : std::string("(none)")) << '\n';
  return os.str();
}

std::string format(const QReport &r)
{
  std::ostringstream os;
  os << "degree " << r.degree << " (" << to_string(r.convention) << " convention)\n"
     << "  cochains     " << r.dims.cochains << '\n'
     << "  cocycles     " << r.dims.cocycles << '\n'
     << "  coboundaries " << r.dims.coboundaries << '\n'
     << "  cohomology   " << r.dims.cohomology << '\n';
  for (std::size_t i = 0; i < r.cocycle_basis.size(); ++i)
    os << "cocycle " << i + 1 << ": " << format(r.cocycle_basis[i]);
  return os.str();
}

} // namespace liedeform::text
