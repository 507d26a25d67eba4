#include "liedeform/json_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace liedeform::io {

namespace {

// dimension cap keeps malformed input from asking for absurd allocations
constexpr long max_dim = 64;
constexpr double max_coefficients = 1 << 20;

std::string type_name(const Json &j) { return j.type_name(); }

const Json &field(const Json &j, const std::string &path, const char *key)
{
  if (!j.is_object())
    throw SchemaError(path, "expected an object, got " + type_name(j));
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_fields(const Json &j, const std::string &path, std::initializer_list<const char *> keys)
{
  if (!j.is_object())
    throw SchemaError(path, "expected an object, got " + type_name(j));
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char *k : keys)
      known = known || it.key() == k;
    if (!known)
      throw SchemaError(path, "unexpected field \"" + it.key() + "\"");
  }
}

long integer(const Json &j, const std::string &path, long lo, long hi)
{
  if (!j.is_number_integer())
    throw SchemaError(path, "expected an integer, got " + type_name(j));
  const auto v = j.get<long long>();
  if (v < lo || v > hi)
    throw SchemaError(path, "integer " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  return static_cast<long>(v);
}

const Json &array(const Json &j, const std::string &path)
{
  if (!j.is_array())
    throw SchemaError(path, "expected an array, got " + type_name(j));
  return j;
}

std::string at(const std::string &path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string &path, const char *key) { return path + "." + key; }

QVector vector_from_json(const Json &j, const std::string &path, long len)
{
  array(j, path);
  if (static_cast<long>(j.size()) != len)
    throw SchemaError(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  QVector v(len);
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = rational_from_json(j[i], at(path, i));
  return v;
}

Json vector_to_json(const QVector &v)
{
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i)
    a.push_back(to_json(v(i)));
  return a;
}

std::vector<QSkewMap> skew_list(const Json &j, const std::string &path, std::size_t expected)
{
  array(j, path);
  if (j.size() != expected)
    throw SchemaError(path, "expected " + std::to_string(expected) + " coefficients, got " + std::to_string(j.size()));
  std::vector<QSkewMap> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(skew_from_json(j[i], at(path, i)));
  return out;
}

} // namespace

Json parse(const std::string &text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw SchemaError("$", "cannot read file \"" + path + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// ---------------------------------------------------------------------------
// writers

Json to_json(const Rational &r) { return r.str(); }

Json to_json(const QMatrix &m)
{
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    rows.push_back(vector_to_json(m.row(i).transpose()));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const QSkewMap &x)
{
  Json terms = Json::array();
  const auto tuples = x.tuples();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const QVector v = x.coefficients().col(static_cast<Index>(k));
    if (is_zero(v))
      continue;
    terms.push_back(Json{{"indices", tuples[k]}, {"value", vector_to_json(v)}});
  }
  return Json{{"arity", x.arity()},
              {"source_dim", x.source_dim()},
              {"target_dim", x.target_dim()},
              {"terms", terms}};
}

Json to_json(const QLieAlgebra &a)
{
  Json brackets = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      const QVector v = a.bracket_basis(i, j);
      if (is_zero(v))
        continue;
      brackets.push_back(Json{{"i", i}, {"j", j}, {"coeffs", vector_to_json(v)}});
    }
  return Json{{"dim", a.dim()}, {"brackets", brackets}};
}

Json to_json(const QTriple &t)
{
  return Json{{"rho", to_json(t.rho())}, {"theta", to_json(t.theta())}, {"phi", to_json(t.phi())}};
}

Json to_json(const QCochain &c)
{
  return Json{{"degree", c.degree()},
              {"x1", to_json(c.x1())},
              {"x2", to_json(c.x2())},
              {"x3", c.x3() ? to_json(*c.x3()) : Json(nullptr)}};
}

Json to_json(const QCurve &c)
{
  Json rho = Json::array(), theta = Json::array(), phi = Json::array();
  for (int i = 0; i < c.order(); ++i) {
    rho.push_back(to_json(c.rho_coeffs()[static_cast<std::size_t>(i)]));
    theta.push_back(to_json(c.theta_coeffs()[static_cast<std::size_t>(i)]));
    phi.push_back(to_json(c.phi_coeffs()[static_cast<std::size_t>(i)]));
  }
  return Json{{"base", to_json(c.base())}, {"order", c.order()}, {"rho", rho}, {"theta", theta}, {"phi", phi}};
}

Json to_json(const CohomologyDims &d)
{
  return Json{{"cochains", d.cochains},
              {"cocycles", d.cocycles},
              {"coboundaries", d.coboundaries},
              {"cohomology", d.cohomology}};
}

Json to_json(const QReport &r)
{
  Json basis = Json::array();
  for (const auto &c : r.cocycle_basis)
    basis.push_back(to_json(c));
  return Json{{"degree", r.degree},
              {"convention", std::string(to_string(r.convention))},
              {"dims", to_json(r.dims)},
              {"cocycle_basis", basis}};
}

Json to_json(const std::vector<OrderDefects<Rational>> &defects)
{
  Json rows = Json::array();
  for (const auto &d : defects)
    rows.push_back(Json{{"order", d.order},
                        {"vanishes", d.vanishes()},
                        {"jacobi_rho", to_json(d.jacobi_rho)},
                        {"jacobi_theta", to_json(d.jacobi_theta)},
                        {"fiber", to_json(d.fiber)}});
  return rows;
}

Json to_json(const IdentityReading &r)
{
  return Json{{"convention", std::string(to_string(r.convention))},
              {"sign", r.sign},
              {"rhs", r.rhs == RhsReading::phi_t ? "phi_t" : "base_phi"},
              {"inner_range", r.range == InnerRange::from_zero ? "from_zero" : "interior"}};
}

Json to_json(const std::vector<IdentityOrder<Rational>> &report)
{
  Json rows = Json::array();
  for (const auto &row : report) {
    Json agree = Json::array();
    for (const auto &r : all_identity_readings())
      if (holds(row, r))
        agree.push_back(to_json(r));
    rows.push_back(Json{{"order", row.order},
                        {"lhs_paper", to_json(row.lhs_paper)},
                        {"lhs_geometric", to_json(row.lhs_geometric)},
                        {"rhs_phi_t", to_json(row.rhs_phi_t)},
                        {"rhs_base_phi", to_json(row.rhs_base_phi)},
                        {"sum_from_zero", to_json(row.sum_from_zero)},
                        {"sum_interior", to_json(row.sum_interior)},
                        {"agreeing_readings", agree}});
  }
  return rows;
}

Json to_json(const ObstructionReport<Rational> &r)
{
  Json freedom = Json::array();
  for (const auto &c : r.freedom)
    freedom.push_back(to_json(c));
  Json out{{"order", r.order}, {"solvable", r.solvable}};
  out["solution"] = r.solution ? to_json(*r.solution) : Json(nullptr);
  out["obstruction"] = r.obstruction ? to_json(*r.obstruction) : Json(nullptr);
  out["obstruction_vector"] = r.obstruction ? vector_to_json(r.obstruction_vector) : Json(nullptr);
  out["obstruction_is_cocycle"] = r.obstruction_is_cocycle ? Json(*r.obstruction_is_cocycle) : Json(nullptr);
  out["freedom"] = freedom;
  return out;
}

// ---------------------------------------------------------------------------
// readers

Rational rational_from_json(const Json &j, const std::string &path)
{
  if (!j.is_string())
    throw SchemaError(path, "expected a rational string \"p/q\", got " + type_name(j));
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument &e) {
    throw SchemaError(path, e.what());
  }
}

QMatrix matrix_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"rows", "cols", "entries"});
  const long rows = integer(field(j, path, "rows"), dot(path, "rows"), 0, max_dim);
  const long cols = integer(field(j, path, "cols"), dot(path, "cols"), 0, max_dim);
  const auto epath = dot(path, "entries");
  const Json &e = array(field(j, path, "entries"), epath);
  if (static_cast<long>(e.size()) != rows)
    throw SchemaError(epath, "expected " + std::to_string(rows) + " rows, got " + std::to_string(e.size()));
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < e.size(); ++i)
    m.row(static_cast<Index>(i)) = vector_from_json(e[i], at(epath, i), cols).transpose();
  return m;
}

QSkewMap skew_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"arity", "source_dim", "target_dim", "terms"});
  const int arity = static_cast<int>(integer(field(j, path, "arity"), dot(path, "arity"), 1, max_dim));
  const int src = static_cast<int>(integer(field(j, path, "source_dim"), dot(path, "source_dim"), 0, max_dim));
  const int tgt = static_cast<int>(integer(field(j, path, "target_dim"), dot(path, "target_dim"), 0, max_dim));
  double size = tgt;
  for (int i = 1; i <= arity && i <= src; ++i)
    size = size * (src - arity + i) / i;
  if (arity <= src && size > max_coefficients)
    throw SchemaError(path, "skew map too large");
  QSkewMap x(arity, src, tgt);
  const auto tpath = dot(path, "terms");
  const Json &terms = array(field(j, path, "terms"), tpath);
  std::set<IndexTuple> seen;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto kpath = at(tpath, k);
    only_fields(terms[k], kpath, {"indices", "value"});
    const auto ipath = dot(kpath, "indices");
    const Json &idx = array(field(terms[k], kpath, "indices"), ipath);
    if (static_cast<int>(idx.size()) != arity)
      throw SchemaError(ipath, "expected " + std::to_string(arity) + " indices, got " + std::to_string(idx.size()));
    IndexTuple t;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      t.push_back(static_cast<int>(integer(idx[i], at(ipath, i), 0, src - 1)));
      if (i > 0 && t[i] <= t[i - 1])
        throw SchemaError(at(ipath, i), "indices must be strictly increasing");
    }
    if (!seen.insert(t).second)
      throw SchemaError(ipath, "duplicate index tuple");
    x.coefficients().col(x.column_of(t)) = vector_from_json(field(terms[k], kpath, "value"), dot(kpath, "value"), tgt);
  }
  return x;
}

QLieAlgebra algebra_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"dim", "brackets"});
  const int n = static_cast<int>(integer(field(j, path, "dim"), dot(path, "dim"), 0, max_dim));
  QSkewMap br(2, n, n);
  const auto bpath = dot(path, "brackets");
  const Json &bs = array(field(j, path, "brackets"), bpath);
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const auto kpath = at(bpath, k);
    only_fields(bs[k], kpath, {"i", "j", "coeffs"});
    const int i = static_cast<int>(integer(field(bs[k], kpath, "i"), dot(kpath, "i"), 0, n - 1));
    const int jj = static_cast<int>(integer(field(bs[k], kpath, "j"), dot(kpath, "j"), 0, n - 1));
    if (i >= jj)
      throw SchemaError(dot(kpath, "j"), "brackets are stored for i < j only");
    if (!seen.insert({i, jj}).second)
      throw SchemaError(kpath, "duplicate bracket [e" + std::to_string(i) + ", e" + std::to_string(jj) + "]");
    br.set(std::array<int, 2>{i, jj}, vector_from_json(field(bs[k], kpath, "coeffs"), dot(kpath, "coeffs"), n));
  }
  return QLieAlgebra::unchecked(std::move(br));
}

QTriple triple_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"rho", "theta", "phi"});
  auto rho = algebra_from_json(field(j, path, "rho"), dot(path, "rho"));
  auto theta = algebra_from_json(field(j, path, "theta"), dot(path, "theta"));
  auto phi = matrix_from_json(field(j, path, "phi"), dot(path, "phi"));
  if (phi.rows() != theta.dim() || phi.cols() != rho.dim())
    throw SchemaError(dot(path, "phi"), "expected a " + std::to_string(theta.dim()) + "x" + std::to_string(rho.dim()) +
                                            " matrix");
  return QTriple::unchecked(std::move(rho), std::move(theta), std::move(phi));
}

QCochain cochain_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"degree", "x1", "x2", "x3"});
  const int p = static_cast<int>(integer(field(j, path, "degree"), dot(path, "degree"), 0, max_dim));
  auto x1 = skew_from_json(field(j, path, "x1"), dot(path, "x1"));
  auto x2 = skew_from_json(field(j, path, "x2"), dot(path, "x2"));
  const Json &x3j = field(j, path, "x3");
  std::optional<QSkewMap> x3;
  if (!x3j.is_null())
    x3 = skew_from_json(x3j, dot(path, "x3"));
  try {
    return QCochain(p, std::move(x1), std::move(x2), std::move(x3));
  } catch (const DimensionError &e) {
    throw SchemaError(path, e.what());
  }
}

QCurve curve_from_json(const Json &j, const std::string &path)
{
  only_fields(j, path, {"base", "order", "rho", "theta", "phi"});
  auto base = triple_from_json(field(j, path, "base"), dot(path, "base"));
  const auto n = static_cast<std::size_t>(integer(field(j, path, "order"), dot(path, "order"), 0, max_dim));
  auto rho = skew_list(field(j, path, "rho"), dot(path, "rho"), n);
  auto theta = skew_list(field(j, path, "theta"), dot(path, "theta"), n);
  auto phi = skew_list(field(j, path, "phi"), dot(path, "phi"), n);
  try {
    return QCurve(std::move(base), std::move(rho), std::move(theta), std::move(phi));
  } catch (const DimensionError &e) {
    throw SchemaError(path, e.what());
  }
}

QTriple verified(const QTriple &t)
{
  if (auto d = jacobi_defect(t.rho()); !d.is_zero())
    throw PreconditionError("rho does not satisfy the Jacobi identity", to_json(d).dump());
  if (auto d = jacobi_defect(t.theta()); !d.is_zero())
    throw PreconditionError("theta does not satisfy the Jacobi identity", to_json(d).dump());
  if (auto d = morphism_defect(t); !d.is_zero())
    throw PreconditionError("phi is not a Lie algebra morphism", to_json(d).dump());
  return QTriple(QLieAlgebra(t.rho().bracket_map()), QLieAlgebra(t.theta().bracket_map()), t.phi());
}

} // namespace liedeform::io
