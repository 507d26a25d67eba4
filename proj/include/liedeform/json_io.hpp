#ifndef LIEDEFORM_JSON_IO_HPP
#define LIEDEFORM_JSON_IO_HPP

// JSON encoding of rationals, algebras, maps, triples, cochains, curves and
// reports.
//
//   rational     "p/q" or "p"
//   algebra      {"dim": n, "brackets": [{"i": i, "j": j, "coeffs": [...]}]}, i < j
//   linear map   {"rows": m, "cols": n, "entries": [[...], ...]}
//   skew map     {"arity": p, "source_dim": n, "target_dim": m,
//                 "terms": [{"indices": [i1 < ... < ip], "value": [...]}]}
//   triple       {"rho": algebra, "theta": algebra, "phi": linear map}
//   cochain      {"degree": p, "x1": skew, "x2": skew, "x3": skew | null}
//   curve        {"base": triple, "order": N, "rho": [...], "theta": [...], "phi": [...]}
//
// Readers never trust their input: every failure is a SchemaError whose
// message starts with a JSON path to the offending field.

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "liedeform/types.hpp"

namespace liedeform::io {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error
{
  SchemaError(const std::string &path, const std::string &msg)
      : std::runtime_error(path + ": " + msg), path_(path)
  {
  }
  const std::string &path() const { return path_; }

private:
  std::string path_;
};

/// Parses text; syntax errors become SchemaError at "$".
Json parse(const std::string &text);
Json read_file(const std::string &path);

Json to_json(const Rational &r);
Json to_json(const QMatrix &m);
Json to_json(const QSkewMap &x);
Json to_json(const QLieAlgebra &a);
Json to_json(const QTriple &t);
Json to_json(const QCochain &c);
Json to_json(const QCurve &c);
Json to_json(const QReport &r);
Json to_json(const CohomologyDims &d);
Json to_json(const std::vector<OrderDefects<Rational>> &defects);
Json to_json(const std::vector<IdentityOrder<Rational>> &report);
Json to_json(const ObstructionReport<Rational> &r);
Json to_json(const IdentityReading &r);

Rational rational_from_json(const Json &j, const std::string &path = "$");
QMatrix matrix_from_json(const Json &j, const std::string &path = "$");
QSkewMap skew_from_json(const Json &j, const std::string &path = "$");
/// Returns an unchecked algebra; Jacobi is the caller's business.
QLieAlgebra algebra_from_json(const Json &j, const std::string &path = "$");
/// Returns an unchecked triple (shapes are checked, membership is not).
QTriple triple_from_json(const Json &j, const std::string &path = "$");
QCochain cochain_from_json(const Json &j, const std::string &path = "$");
QCurve curve_from_json(const Json &j, const std::string &path = "$");

/// Rebuilds t through the checked constructors. Throws PreconditionError
/// naming the failing condition.
QTriple verified(const QTriple &t);

} // namespace liedeform::io

#endif
