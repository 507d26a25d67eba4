#ifndef LIEDEFORM_TEXT_FORMAT_HPP
#define LIEDEFORM_TEXT_FORMAT_HPP

// Human-readable rendering. Not a stable format; JSON is the contract.

#include <string>

#include "liedeform/types.hpp"

namespace liedeform::text {

/// Sum of basis terms, e.g. "2 e1^e2 ⊗ f3 - e1^e3 ⊗ f1", 1-based indices.
/// `src` and `tgt` name the source and target bases.
std::string format(const QSkewMap &x, const std::string &src = "e", const std::string &tgt = "f");

/// Linear combination of basis vectors, e.g. "2 e1 - e3".
std::string format(const QVector &v, const std::string &basis);

/// Nonzero brackets [b_i, b_j] with i < j, one per line.
std::string format(const QLieAlgebra &a, const std::string &basis);

/// One line per component; U basis e, V basis f.
std::string format(const QCochain &c);

std::string format(const QReport &r);

} // namespace liedeform::text

#endif
