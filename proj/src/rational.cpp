#include "liedeform/rational.hpp"

#include <stdexcept>

namespace liedeform {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
  if (s.empty())
    return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-')
    i = 1;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

} // namespace

Rational::Rational(long num, long den)
{
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!valid_integer(num, true))
    throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den, false))
      throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    mpz_class d{std::string(den)};
    if (d == 0)
      throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
    q = mpq_class(mpz_class(std::string(num)), d);
  }
  return Rational(std::move(q));
}

std::string Rational::str() const
{
  if (v_.get_den() == 1)
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

} // namespace liedeform
