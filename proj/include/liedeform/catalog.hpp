#ifndef LIEDEFORM_CATALOG_HPP
#define LIEDEFORM_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liedeform/types.hpp"

namespace liedeform::catalog {

QLieAlgebra abelian(int n);
/// [x, y] = z.
QLieAlgebra heisenberg3();
/// Basis (h, e, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h.
QLieAlgebra sl2();
/// Basis (a, b): [a, b] = b.
QLieAlgebra aff1();
/// Basis of a followed by basis of b; the summands commute.
QLieAlgebra direct_sum(const QLieAlgebra &a, const QLieAlgebra &b);

/// Parses "abelian(3)", "heisenberg3", "sl2", "aff1", "direct_sum(sl2,aff1)".
/// Throws std::invalid_argument on unknown names or bad parameters.
QLieAlgebra algebra(std::string_view spec);

QTriple identity(const QLieAlgebra &a);
QTriple zero_morphism(const QLieAlgebra &source, const QLieAlgebra &target);
/// aff1 -> abelian(1), a -> 1, b -> 0.
QTriple aff1_quotient();

struct NamedTriple
{
  std::string name;
  QTriple triple;
};

/// Fixture set used by the property and acceptance suites, GL-twisted
/// variants included.
std::vector<NamedTriple> standard_triples();

} // namespace liedeform::catalog

#endif
