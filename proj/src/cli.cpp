#include "liedeform/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "liedeform/catalog.hpp"
#include "liedeform/json_io.hpp"
#include "liedeform/text_format.hpp"

namespace liedeform::cli {

namespace {

using io::Json;

struct Options
{
  std::string triple, cochain, curve, g, h;
  int degree = 0;
  int order = -1;
  std::string convention = "paper";
  std::string format = "json";
  std::vector<std::string> catalog_spec;
  std::string as_triple;
  std::string target;
};

SignConvention convention_of(const Options &o)
{
  // CLI11 already restricted the value
  return *parse_convention(o.convention);
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

QTriple load_triple(const std::string &path) { return io::verified(io::triple_from_json(io::read_file(path))); }

int cmd_check(const Options &o, std::ostream &out, std::ostream &err)
{
  const QTriple t = io::triple_from_json(io::read_file(o.triple));
  const auto jr = jacobi_defect(t.rho());
  const auto jt = jacobi_defect(t.theta());
  const auto md = morphism_defect(t);
  const bool good = jr.is_zero() && jt.is_zero() && md.is_zero();
  if (o.format == "text") {
    out << "jacobi(rho)   = " << text::format(jr, "e", "e") << '\n'
        << "jacobi(theta) = " << text::format(jt, "f", "f") << '\n'
        << "morphism      = " << text::format(md, "e", "f") << '\n'
        << (good ? "verified" : "NOT in the morphism bundle") << '\n';
  } else {
    emit(out, Json{{"verified", good},
                   {"jacobi_rho", io::to_json(jr)},
                   {"jacobi_theta", io::to_json(jt)},
                   {"morphism", io::to_json(md)}});
  }
  if (!good) {
    err << "error: triple is not in the morphism bundle\n";
    return inadmissible;
  }
  return ok;
}

int cmd_cohomology(const Options &o, std::ostream &out)
{
  const auto t = load_triple(o.triple);
  const auto r = cohomology(t, o.degree, convention_of(o));
  if (o.format == "text")
    out << text::format(r);
  else
    emit(out, io::to_json(r));
  return ok;
}

int cmd_delta(const Options &o, std::ostream &out)
{
  const auto t = load_triple(o.triple);
  const auto c = io::cochain_from_json(io::read_file(o.cochain));
  const auto d = big_delta(t, c, convention_of(o));
  if (o.format == "text")
    out << "convention " << o.convention << '\n' << text::format(d);
  else
    emit(out, Json{{"convention", o.convention}, {"cochain", io::to_json(d)}});
  return ok;
}

int cmd_act(const Options &o, std::ostream &out)
{
  const auto t = load_triple(o.triple);
  const auto g = io::matrix_from_json(io::read_file(o.g));
  const auto h = io::matrix_from_json(io::read_file(o.h));
  if (g.rows() != t.source_dim() || g.cols() != t.source_dim())
    throw io::SchemaError("$", "--g must be a " + std::to_string(t.source_dim()) + "x" +
                                   std::to_string(t.source_dim()) + " matrix");
  if (h.rows() != t.target_dim() || h.cols() != t.target_dim())
    throw io::SchemaError("$", "--h must be a " + std::to_string(t.target_dim()) + "x" +
                                   std::to_string(t.target_dim()) + " matrix");
  const auto r = act_triple(g, h, t);
  if (o.format == "text")
    out << "rho: " << text::format(r.rho(), "e") << "theta: " << text::format(r.theta(), "f")
        << "phi: " << text::format(QSkewMap::from_linear(r.phi()), "e", "f") << '\n';
  else
    emit(out, io::to_json(r));
  return ok;
}

QCurve load_curve(const std::string &path)
{
  const auto raw = io::curve_from_json(io::read_file(path));
  return QCurve(io::verified(raw.base()), raw.rho_coeffs(), raw.theta_coeffs(), raw.phi_coeffs());
}

int cmd_deform_check(const Options &o, std::ostream &out)
{
  const auto c = load_curve(o.curve);
  const auto defects = curve_defects(c);
  const bool in_bundle = std::all_of(defects.begin(), defects.end(), [](const auto &d) { return d.vanishes(); });
  const auto report = deformation_identity_report(c);
  const auto conv = convention_of(o);
  std::optional<bool> fo_cocycle;
  if (c.order() >= 1)
    fo_cocycle = is_cocycle(c.base(), first_order(c), conv);

  if (o.format == "text") {
    out << "order " << c.order() << ", convention " << o.convention << '\n';
    for (const auto &d : defects)
      out << "t^" << d.order << ": " << (d.vanishes() ? "ok" : "defect") << '\n'
          << "  jacobi(rho)   = " << text::format(d.jacobi_rho, "e", "e") << '\n'
          << "  jacobi(theta) = " << text::format(d.jacobi_theta, "f", "f") << '\n'
          << "  fiber         = " << text::format(d.fiber, "e", "f") << '\n';
    out << (in_bundle ? "curve lies in the bundle to this order\n" : "curve leaves the bundle\n");
    if (fo_cocycle)
      out << "first order is " << (*fo_cocycle ? "" : "not ") << "a cocycle\n";
    return ok;
  }
  Json readings = Json::array();
  for (const auto &r : agreeing_readings(report))
    readings.push_back(io::to_json(r));
  emit(out, Json{{"convention", o.convention},
                 {"order", c.order()},
                 {"in_bundle", in_bundle},
                 {"defects", io::to_json(defects)},
                 {"first_order_is_cocycle", fo_cocycle ? Json(*fo_cocycle) : Json(nullptr)},
                 {"identity", io::to_json(report)},
                 {"agreeing_readings", readings}});
  return ok;
}

int cmd_deform_extend(const Options &o, std::ostream &out)
{
  auto c = load_curve(o.curve);
  const int target = o.order < 0 ? c.order() + 1 : o.order;
  Json steps = Json::array();
  bool obstructed = false;
  while (c.order() < target) {
    auto r = extend_deformation(c);
    steps.push_back(io::to_json(r));
    if (!r.solvable) {
      obstructed = true;
      break;
    }
    c = *r.extended;
  }
  if (o.format == "text") {
    out << "extended to order " << c.order() << (obstructed ? " (obstructed at next order)" : "") << '\n';
    for (int i = 1; i <= c.order(); ++i)
      out << "t^" << i << ": " << text::format(c.coefficient(i));
    return ok;
  }
  emit(out, Json{{"convention", "geometric"},
                 {"obstructed", obstructed},
                 {"steps", steps},
                 {"curve", io::to_json(c)}});
  return ok;
}

int cmd_catalog(const Options &o, std::ostream &out)
{
  std::string spec = o.catalog_spec.at(0);
  if (o.catalog_spec.size() == 2)
    spec += "(" + o.catalog_spec[1] + ")";
  else if (o.catalog_spec.size() > 2)
    throw std::invalid_argument("catalog: too many parameters");
  const auto a = catalog::algebra(spec);
  if (o.as_triple.empty()) {
    if (o.format == "text")
      out << text::format(a, "e");
    else
      emit(out, io::to_json(a));
    return ok;
  }
  QTriple t;
  if (o.as_triple == "identity") {
    t = catalog::identity(a);
  } else if (o.as_triple == "zero") {
    t = catalog::zero_morphism(a, o.target.empty() ? a : catalog::algebra(o.target));
  } else {
    if (!(a == catalog::aff1()))
      throw std::invalid_argument("catalog: --as-triple quotient is only defined for aff1");
    t = catalog::aff1_quotient();
  }
  emit(out, io::to_json(t));
  return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Deformation cohomology of Lie algebra morphisms over the rationals", "liedeform"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_convention = [&](CLI::App *sub) {
    sub->add_option("--convention", o.convention, "Sign of the mixed term: paper or geometric")
        ->check(CLI::IsMember({"paper", "geometric"}));
  };

  auto *check = app.add_subcommand("check", "Jacobi and morphism defects of a triple");
  check->add_option("--triple", o.triple, "Triple JSON")->required();
  add_common(check);

  auto *coh = app.add_subcommand("cohomology", "Cocycle, coboundary and cohomology dimensions");
  coh->add_option("--triple", o.triple, "Triple JSON")->required();
  coh->add_option("--degree", o.degree, "Cochain degree")->required()->check(CLI::Range(0, 64));
  add_convention(coh);
  add_common(coh);

  auto *delta = app.add_subcommand("delta", "Apply the combined differential to a cochain");
  delta->add_option("--triple", o.triple, "Triple JSON")->required();
  delta->add_option("--cochain", o.cochain, "Cochain JSON")->required();
  add_convention(delta);
  add_common(delta);

  auto *act = app.add_subcommand("act", "Act on a triple by (g, h)");
  act->set_help_flag("--help", "Print this help message and exit");
  act->add_option("--triple", o.triple, "Triple JSON")->required();
  act->add_option("--g", o.g, "Invertible linear map on U (JSON)")->required();
  act->add_option("--h", o.h, "Invertible linear map on V (JSON)")->required();
  add_common(act);

  auto *dcheck = app.add_subcommand("deform-check", "Constraint defects and deformation-equation report of a curve");
  dcheck->add_option("--curve", o.curve, "Curve JSON")->required();
  add_convention(dcheck);
  add_common(dcheck);

  auto *dext = app.add_subcommand("deform-extend", "Extend a curve order by order");
  dext->add_option("--curve", o.curve, "Curve JSON")->required();
  dext->add_option("--order", o.order, "Target order (default: one more than the input)")->check(CLI::Range(0, 64));
  add_common(dext);

  auto *cat = app.add_subcommand("catalog", "Emit a catalog algebra or triple");
  cat->add_option("name", o.catalog_spec, "Algebra, e.g. sl2, abelian 3, direct_sum(sl2,aff1)")->required();
  cat->add_option("--as-triple", o.as_triple, "identity | zero | quotient")
      ->check(CLI::IsMember({"identity", "zero", "quotient"}));
  cat->add_option("--target", o.target, "Target algebra for --as-triple zero");
  add_common(cat);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << '\n';
    return bad_input;
  }

  try {
    if (check->parsed())
      return cmd_check(o, out, err);
    if (coh->parsed())
      return cmd_cohomology(o, out);
    if (delta->parsed())
      return cmd_delta(o, out);
    if (act->parsed())
      return cmd_act(o, out);
    if (dcheck->parsed())
      return cmd_deform_check(o, out);
    if (dext->parsed())
      return cmd_deform_extend(o, out);
    if (cat->parsed())
      return cmd_catalog(o, out);
  } catch (const io::SchemaError &e) {
    err << "schema error: " << e.what() << '\n';
    return bad_input;
  } catch (const DimensionError &e) {
    err << "schema error: $: " << e.what() << '\n';
    return bad_input;
  } catch (const PreconditionError &e) {
    err << "precondition failed: " << e.what() << '\n';
    if (!e.detail().empty())
      err << "defect: " << e.detail() << '\n';
    return inadmissible;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  return internal_error;
}

} // namespace liedeform::cli
