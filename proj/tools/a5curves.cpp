// a5curves: command-line front end for hyperelliptic curves with reduced automorphism group A5.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "a5/common/error.hpp"
#include "a5/common/parallel.hpp"
#include "a5/exactfield/json.hpp"
#include "a5/loci/loci.hpp"
#include "a5/polyring/json.hpp"
#include "a5/verify/suite.hpp"

namespace {

using nlohmann::json;
using namespace a5;

constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

std::vector<Rational> parse_lambdas(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

json case_json(const CaseDescriptor& cs) {
  json m = json::array();
  for (auto x : cs.multipliers) m.push_back(to_string(x));
  return {{"case", cs.case_no}, {"group", to_string(cs.group)}, {"delta", cs.delta}, {"genus", cs.genus},
          {"multipliers", m}};
}

template <FieldElement F>
json dihedral_json(const DihedralInvariants<F>& u) {
  json list = json::array();
  for (const auto& v : u.u) list.push_back(v);
  return {{"d", u.d}, {"u", list}};
}

json invariant_set_json(const InvariantSet<Rational>& s) {
  json j = {{"I2", s.I2}, {"I4", s.I4}, {"I6", s.I6}};
  auto opt = [&](const char* key, const std::optional<Rational>& v) { j[key] = v ? json(*v) : json(nullptr); };
  opt("I6star", s.I6star);
  opt("i1", s.i1);
  opt("i2", s.i2);
  opt("i3", s.i3);
  opt("i4", s.i4);
  return j;
}

json fiber_json(const SingularFiber& f) {
  return {{"kind", to_string(f.kind)}, {"q", poly_to_json(f.q, "lambda")}, {"D", f.D.get_str()},
          {"d", f.d_table.get_str()}, {"certified", f.certified}};
}

// Flattened "path: value" lines for --format text.
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& doc, const std::string& format) {
  if (format == "text") flatten(doc, "", std::cout);
  else std::cout << doc.dump(2) << '\n';
}

json cmd_icosa(const std::string& what) {
  if (what == "group") {
    const MoebiusGroup g = build_a5();
    json profile = json::object(), elems = json::array();
    for (const auto& [k, v] : g.order_profile()) profile[std::to_string(k)] = v;
    for (const auto& e : g.elements()) {
      json row = json::array();
      for (const auto& a : e.entries()) row.push_back(a);
      elems.push_back({{"matrix", row}, {"order", e.order()}, {"text", to_string(e)}});
    }
    return {{"order", g.size()}, {"order_profile", profile}, {"elements", elems}};
  }
  if (what == "phi") {
    return {{"phi", rational_function_to_json(phi())},
            {"R", poly_to_json(icosa_R())},
            {"S", poly_to_json(icosa_S())},
            {"T", poly_to_json(icosa_T())}};
  }
  const IdentityCheck c = verify_icosahedral_identity();
  return {{"identity", "T^2 = R^3 + 1728 S^5"}, {"holds", c.holds}, {"degree", c.degree}};
}

json cmd_decomp(const std::string& what, const std::string& inner) {
  if (what == "phi1") {
    const TbarRelation rel = check_tbar_relation(Gaussian(Rational(512), Rational(256)));
    return {{"phi1", rational_function_to_json(phi1())},
            {"Rbar", poly_to_json(rbar())},
            {"Sbar", poly_to_json(sbar())},
            {"Tbar", poly_to_json(tbar())},
            {"tbar_relation", {{"proportional", rel.proportional}, {"constant", rel.constant}}}};
  }
  if (inner.empty()) fail(ErrorKind::UsageError, "decomp check needs --inner x2|x3|x5");
  const InnerKind kind = inner == "x2" ? InnerKind::X2 : inner == "x3" ? InnerKind::X3 : InnerKind::X5;
  const InnerCheck c = check_inner(kind);
  return {{"inner", inner}, {"found", c.found}, {"outer_degree", c.outer_degree}, {"outer", c.outer_json}};
}

json cmd_curve(int genus, const std::string& lambdas, const std::string& model) {
  const auto ls = parse_lambdas(lambdas);
  const Model m = parse_model(model);
  if (m == Model::X2) {
    const CurveModel<Gaussian> c = curve_equation_x2(genus, std::vector<Gaussian>(ls.begin(), ls.end()));
    return {{"model", "x2"}, {"case", case_json(c.cs)}, {"f", poly_to_json(c.f)},
            {"weierstrass_points", weierstrass_count(c.f)}};
  }
  if (m != Model::X5) fail(ErrorKind::UsageError, "curve --model must be x5 or x2");
  const CurveModel<Rational> c = curve_equation_x5(genus, ls);
  return {{"model", "x5"}, {"case", case_json(c.cs)}, {"f", poly_to_json(c.f)},
          {"weierstrass_points", weierstrass_count(c.f)}};
}

json cmd_invariants(int genus, const std::string& lambdas, bool absolute, bool dihedral) {
  const auto ls = parse_lambdas(lambdas);
  json out = {{"genus", genus}, {"lambda", ls}};
  if (absolute) {
    const CurveModel<Rational> c = curve_equation_x5(genus, ls);
    out["case"] = case_json(c.cs);
    out["absolute"] = invariant_set_json(classical_invariants(BinaryForm<Rational>::from_poly(c.f, 2 * genus + 2)));
  }
  if (dihedral) {
    const DihedralInvariants<Rational> u = dihedral_invariants_x2(genus, ls);
    out["dihedral"] = dihedral_json(u);
    out["dihedral"]["relation"] = to_string(check_group_relation(u, genus));
  }
  return out;
}

json cmd_locus(int case_no, const std::string& what) {
  const LocusCurve l = build_locus(case_no);
  json out = {{"case", case_no}, {"genus", l.genus}};
  if (what == "F") {
    out["F"] = bivariate_to_json(l.F, "i1", "i2");
    out["kappa"] = json::array({l.kappa[0], l.kappa[1], l.kappa[2]});
    out["F_rescaled"] = bivariate_to_json(rescale_locus(l.F, l.kappa[0], l.kappa[1]), "i1", "i2");
    out["i1"] = rational_function_to_json(l.i1, "lambda");
    out["i2"] = rational_function_to_json(l.i2, "lambda");
    return out;
  }
  json fibers = json::array();
  for (const auto& f : singular_fibers(l)) {
    json e = fiber_json(f);
    if (what == "moduli") {
      e["invariant"] = moduli_invariant_at(f, l);
      e["field_of_moduli"] = field_of_moduli_at(f, l).get_str();
    }
    fibers.push_back(std::move(e));
  }
  out["fibers"] = fibers;
  return out;
}

template <FieldElement F>
json model_json(const CurveModel<F>& m, const DihedralInvariants<F>& u) {
  return {{"genus", m.genus}, {"group", to_string(m.cs.group)}, {"f", poly_to_json(m.f)}, {"dihedral", dihedral_json(u)}};
}

json cmd_model(int genus, const std::string& lambdas, int case_no, int fiber) {
  if (case_no) {
    if (fiber < 1 || fiber > 3) fail(ErrorKind::UsageError, "model --case needs --fiber 1..3");
    const LocusCurve l = build_locus(case_no);
    const auto fibers = singular_fibers(l);
    const SingularFiber& f = fibers.at(fiber - 1);
    const Integer d = field_of_moduli_at(f, l);
    const DihedralInvariants<QuadraticElement> u = dihedral_invariants_at_fiber(f, l);
    const CurveModel<QuadraticElement> m = rational_model(u, classify_genus(l.genus).group);
    json out = model_json(m, u);
    out["case"] = case_no;
    out["fiber"] = fiber_json(f);
    out["field_of_moduli"] = d.get_str();
    return out;
  }
  if (!genus) fail(ErrorKind::UsageError, "model needs --genus G --lambda ... or --case N --fiber k");
  const DihedralInvariants<Rational> u = dihedral_invariants_x2(genus, parse_lambdas(lambdas));
  return model_json(rational_model(u, classify_genus(genus).group), u);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for hyperelliptic curves with reduced automorphism group A5"};
  std::string format = "json";
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.require_subcommand(1);

  std::string icosa_what = "verify";
  auto* icosa = app.add_subcommand("icosa", "A5 group, phi and the icosahedral identity");
  icosa->add_option("what", icosa_what)->check(CLI::IsMember({"group", "phi", "verify"}));

  std::string decomp_what, inner;
  auto* decomp = app.add_subcommand("decomp", "Decompositions of phi");
  decomp->add_option("what", decomp_what)->required()->check(CLI::IsMember({"phi1", "check"}));
  decomp->add_option("--inner", inner)->check(CLI::IsMember({"x2", "x3", "x5"}));

  int genus = 0, case_no = 0, fiber = 0;
  std::string lambdas, model = "x5", emit_what = "F", suite = "all";
  auto* curve = app.add_subcommand("curve", "Curve equation for a genus and branch values");
  curve->add_option("--genus", genus)->required();
  curve->add_option("--lambda", lambdas, "Comma-separated rationals p/q");
  curve->add_option("--model", model)->check(CLI::IsMember({"x5", "x2"}));

  bool absolute = false, dihedral = false, all = false;
  auto* inv = app.add_subcommand("invariants", "Classical and dihedral invariants");
  inv->add_option("--genus", genus)->required();
  inv->add_option("--lambda", lambdas);
  inv->add_flag("--absolute", absolute);
  inv->add_flag("--dihedral", dihedral);
  inv->add_flag("--all", all);

  auto* locus = app.add_subcommand("locus", "One-dimensional locus of a case");
  locus->add_option("--case", case_no)->required()->check(CLI::Range(1, 8));
  locus->add_option("--emit", emit_what)->check(CLI::IsMember({"F", "fibers", "moduli"}));

  auto* mdl = app.add_subcommand("model", "Rational model over the field of moduli");
  mdl->add_option("--genus", genus);
  mdl->add_option("--lambda", lambdas);
  mdl->add_option("--case", case_no)->check(CLI::Range(1, 8));
  mdl->add_option("--fiber", fiber)->check(CLI::Range(1, 3));

  auto* verify = app.add_subcommand("verify", "Run the reproduction checks");
  std::vector<std::string> suites = a5::suite_names();
  verify->add_option("--suite", suite)->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    a5::set_thread_count(threads);
    json doc;
    if (*icosa) {
      doc = cmd_icosa(icosa_what);
    } else if (*decomp) {
      doc = cmd_decomp(decomp_what, inner);
    } else if (*curve) {
      doc = cmd_curve(genus, lambdas, model);
    } else if (*inv) {
      if (!absolute && !dihedral) all = true;
      doc = cmd_invariants(genus, lambdas, absolute || all, dihedral || all);
    } else if (*locus) {
      doc = cmd_locus(case_no, emit_what);
    } else if (*mdl) {
      doc = cmd_model(genus, lambdas, case_no, fiber);
    } else if (*verify) {
      const a5::Report report = a5::run_suite(suite, a5::Fixtures::load());
      if (format == "text") std::cout << report.to_text();
      else std::cout << report.to_json().dump(2) << '\n';
      return report.passed() ? 0 : kExitVerify;
    }
    emit(doc, format);
    return 0;
  } catch (const a5::Error& e) {
    std::cerr << json{{"error", std::string(a5::to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
    return e.kind() == a5::ErrorKind::UsageError ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
}
