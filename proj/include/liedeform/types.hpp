#ifndef LIEDEFORM_TYPES_HPP
#define LIEDEFORM_TYPES_HPP

// The exact-rational instantiation used by the catalog, I/O and the CLI.

#include "liedeform/deformation.hpp"
#include "liedeform/rational.hpp"

namespace liedeform {

using QMatrix = MatrixX<Rational>;
using QVector = VectorX<Rational>;
using QSkewMap = SkewMap<Rational>;
using QLieAlgebra = LieAlgebra<Rational>;
using QTriple = Triple<Rational>;
using QCochain = Cochain<Rational>;
using QCurve = TruncatedCurve<Rational>;
using QReport = CohomologyReport<Rational>;

} // namespace liedeform

#endif
