#ifndef LIEDEFORM_ERRORS_HPP
#define LIEDEFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liedeform {

/// Shapes or arities of the operands do not fit together.
struct DimensionError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

/// An input is well formed but mathematically inadmissible: a bracket that
/// fails Jacobi, a map that is not a morphism, a singular group element, a
/// curve whose lower orders do not satisfy the constraints.
struct PreconditionError : std::domain_error
{
  PreconditionError(const std::string &what, std::string detail = {})
      : std::domain_error(what), detail_(std::move(detail))
  {
  }
  const std::string &detail() const noexcept { return detail_; }

private:
  std::string detail_;
};

} // namespace liedeform

#endif
