#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gkp/degeneracy.hpp"
#include "gkp/egf.hpp"
#include "gkp/error.hpp"
#include "gkp/identify.hpp"
#include "gkp/json_io.hpp"
#include "gkp/oeis.hpp"
#include "gkp/residue.hpp"
#include "gkp/triangle.hpp"

namespace gkp::cli {

namespace {

namespace mp = boost::multiprecision;

struct Options {
  std::string params;
  std::string format = "table";
  int rows = 10;
  int n = 0;
  std::string x;
  int order = 10;
  std::string tol = "1e-30";
  std::string kase;
  bool force_float = false;
  unsigned precision = 60;
  bool alt = false;
  std::string input;
  std::string anum;
  bool offline = false;
  bool table1 = false;
  std::string cache_dir;
  std::string fixtures;
  std::string base_url;
  std::string layout;
  std::string kind;
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string real_str(const Real& v, int digits = 40) { return v.str(digits); }

Real rel_error(const Real& got, const Real& want) {
  return mp::abs(got - want) / std::max(Real(1), Real(mp::abs(want)));
}

int cmd_classify(const Options& o, std::ostream& out) {
  const ParamTuple p = parse_params(o.params);
  const RecType t = classify(p);
  const SpecialCase sc = special_case_detect(p);
  const DegClass dc = degeneracy_class(p);
  if (json_out(o)) {
    Json j{{"params", params_to_json(p)}, {"type", std::string(to_string(t))}};
    if (t == RecType::I) {
      const TypeIDerived d = derived_type_i(p);
      j["derived"] = {{"r", to_string(d.r)}, {"rp", to_string(d.rp)}, {"s", to_string(d.s)},
                      {"sp", to_string(d.sp)}, {"sigma", d.sigma}};
    }
    j["special_case"] = std::string(to_string(sc));
    j["degeneracy"] = degclass_to_json(dc);
    out << j.dump() << "\n";
    return 0;
  }
  out << "Type " << to_string(t) << "\n";
  if (t == RecType::I) {
    const TypeIDerived d = derived_type_i(p);
    out << "r=" << to_string(d.r) << " r'=" << to_string(d.rp) << " s=" << to_string(d.s)
        << " s'=" << to_string(d.sp) << " sigma=" << d.sigma << "\n";
  }
  out << "special case: " << to_string(sc) << "\n";
  out << "degeneracy: " << to_string(dc.tag) << "\n";
  return 0;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  const Triangle t = triangle(parse_params(o.params), o.rows);
  if (json_out(o)) {
    out << triangle_to_json(t).dump() << "\n";
    return 0;
  }
  for (int n = 0; n <= t.depth(); ++n) {
    out << n << ":";
    for (const auto& v : t.row(n)) out << " " << to_string(v);
    out << "\n";
  }
  return 0;
}

int cmd_rowpoly(const Options& o, std::ostream& out) {
  const ParamTuple p = parse_params(o.params);
  const Poly P = row_poly(triangle(p, o.n), o.n);
  std::optional<Rational> value;
  if (!o.x.empty()) value = P(parse_rational(o.x));
  if (json_out(o)) {
    Json j{{"params", params_to_json(p)}, {"n", o.n}, {"coeffs", poly_to_json(P)}};
    if (value) {
      j["x"] = o.x;
      j["value"] = to_string(*value);
    }
    out << j.dump() << "\n";
    return 0;
  }
  out << "P_" << o.n << "(x) = " << P.to_string() << "\n";
  if (value) out << "P_" << o.n << "(" << o.x << ") = " << to_string(*value) << "\n";
  return 0;
}

int cmd_egf_check(const Options& o, std::ostream& out) {
  const ParamTuple p = parse_params(o.params);
  const Rational x0 = parse_rational(o.x);
  const SpecialCase sc = o.kase.empty() ? special_case_detect(p) : parse_special_case(o.kase);
  const auto ref = egf_from_triangle(p, x0, o.order);

  PrecisionScope scope(o.precision + 20);
  const Real tol(o.tol);
  std::string route, field = "float";
  std::optional<int> bad;
  std::vector<std::string> coeffs;
  if (sc != SpecialCase::None) {
    route = "case " + std::string(to_string(sc));
    const EgfSeries s = egf_closed_form(p, sc, x0, o.order, o.force_float, o.precision);
    field = s.field == Field::Exact ? "exact" : "float";
    for (int n = 0; n <= o.order; ++n) {
      const bool ok = s.field == Field::Exact ? s.exact[n] == ref[n]
                                              : rel_error(s.approx[n], to_real(ref[n])) <= tol;
      if (!ok && !bad) bad = n;
      coeffs.push_back(s.field == Field::Exact ? to_string(s.exact[n]) : real_str(s.approx[n]));
    }
  } else {
    route = "characteristics";
    const auto c = egf_characteristics(p, x0, o.order, o.precision);
    for (int n = 0; n <= o.order; ++n) {
      if (rel_error(c[n], to_real(ref[n])) > tol && !bad) bad = n;
      coeffs.push_back(real_str(c[n]));
    }
  }
  if (json_out(o)) {
    Json j{{"params", params_to_json(p)}, {"x", o.x}, {"order", o.order},
           {"case", std::string(to_string(sc))}, {"route", route}, {"field", field},
           {"match", !bad}, {"first_mismatch", bad ? Json(*bad) : Json(nullptr)},
           {"coefficients", coeffs}};
    out << j.dump() << "\n";
  } else if (!bad) {
    out << "MATCH (" << route << ")\n";
  } else {
    out << "MISMATCH (" << route << ") at y^" << *bad << ": closed form " << coeffs[*bad]
        << ", triangle " << to_string(ref[*bad]) << "\n";
  }
  return bad ? 1 : 0;
}

int cmd_residue(const Options& o, std::ostream& out) {
  if (o.precision < 50) throw Error(Errc::ParseError, "--precision must be at least 50");
  const ParamTuple p = parse_params(o.params);
  const Rational x0 = parse_rational(o.x);
  const ResidueJob job{p, o.n, x0, o.precision};
  const ResidueResult r = o.alt ? row_poly_residue_alt(job) : row_poly_residue(job);
  const Rational exact = row_poly(triangle(p, o.n), o.n)(x0);
  PrecisionScope scope(2 * r.working_digits);
  const Real err = rel_error(r.value, to_real(exact));
  const bool ok = err <= Real(o.tol);
  if (json_out(o)) {
    Json j{{"params", params_to_json(p)}, {"n", o.n}, {"x", o.x}, {"form", o.alt ? "alternative" : "main"},
           {"value", real_str(r.value, static_cast<int>(o.precision))}, {"exact", to_string(exact)},
           {"relative_error", real_str(err, 6)}, {"error_estimate", real_str(r.error_estimate, 6)},
           {"working_digits", r.working_digits}, {"match", ok}};
    out << j.dump() << "\n";
  } else {
    out << "P_" << o.n << "(" << o.x << ") = " << real_str(r.value) << "\n";
    out << "exact = " << to_string(exact) << "\n";
    out << "relative error = " << real_str(err, 6) << "\n";
    out << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_degeneracy(const Options& o, std::ostream& out) {
  const ParamTuple p = parse_params(o.params);
  const DegClass c = degeneracy_class(p);
  std::optional<bool> closed_ok;
  if (c.tag != DegTag::NonDegenerate) {
    const Triangle t = triangle(p, o.rows);
    closed_ok = true;
    for (int n = 0; n <= o.rows && *closed_ok; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (degenerate_value(c, n, k) != t.at(n, k)) {
          closed_ok = false;
          break;
        }
      }
    }
  }
  if (json_out(o)) {
    Json j = degclass_to_json(c);
    j["params"] = params_to_json(p);
    j["closed_form_matches"] = closed_ok ? Json(*closed_ok) : Json(nullptr);
    j["rows"] = o.rows;
    out << j.dump() << "\n";
  } else {
    const Json j = degclass_to_json(c);
    out << to_string(c.tag);
    for (const auto& [k, v] : j["invariants"].items()) out << " " << k << "=" << v.get<std::string>();
    out << "\n";
    if (closed_ok) out << "closed form: " << (*closed_ok ? "MATCH" : "MISMATCH") << " through row " << o.rows << "\n";
  }
  return closed_ok.value_or(true) ? 0 : 1;
}

int cmd_identify(const Options& o, std::ostream& out) {
  Triangle t;
  std::optional<ParamTuple> source;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Error(Errc::ParseError, "cannot read " + o.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    t = triangle_from_json(j);
    if (j.contains("params")) source = t.params();
  } else if (!o.params.empty()) {
    source = parse_params(o.params);
    t = triangle(*source, o.rows);
  } else {
    throw Error(Errc::ParseError, "identify needs --input or --params");
  }
  const ParamFamily f = identify(t);
  const bool contains = !source || f.contains(*source);
  if (json_out(o)) {
    Json j = family_to_json(f);
    if (source) j["contains_source"] = contains;
    out << j.dump() << "\n";
  } else {
    out << "particular: " << to_string(f.particular) << "\n";
    out << "dim: " << f.dim << "\n";
    for (const auto& v : f.nullspace_basis) out << "basis: " << to_string(ParamTuple::from_array(v)) << "\n";
    if (source) out << "contains " << to_string(*source) << ": " << (contains ? "yes" : "no") << "\n";
  }
  return contains ? 0 : 1;
}

TriangleLayout parse_layout(const std::string& s) {
  std::array<int, 3> v{0, 0, 0};
  std::stringstream ss(s);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) throw Error(Errc::ParseError, "--layout takes row_offset,k_offset[,k_trim]");
    try {
      v[i++] = std::stoi(item);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad --layout value '" + item + "'");
    }
  }
  if (i < 2) throw Error(Errc::ParseError, "--layout takes row_offset,k_offset[,k_trim]");
  return {v[0], v[1], v[2]};
}

int cmd_oeis_verify(const Options& o, std::ostream& out) {
  FetchOptions fo;
  fo.offline = o.offline;
  if (!o.cache_dir.empty()) fo.cache_dir = o.cache_dir;
  if (!o.fixtures.empty()) fo.fixture_dir = o.fixtures;
  if (!o.base_url.empty()) fo.base_url = o.base_url;
  const auto manifest = load_manifest(fo.fixture_dir);

  struct Job {
    std::string anum, name;
    ParamTuple params;
    TriangleLayout layout;
  };
  std::vector<Job> jobs;
  if (o.table1) {
    for (const auto& [anum, f] : manifest) jobs.push_back({anum, f.name, f.params, f.layout});
  } else {
    if (o.anum.empty()) throw Error(Errc::ParseError, "oeis-verify needs --anum or --table1");
    Job j{o.anum, "", {}, {}};
    const auto it = manifest.find(o.anum);
    if (it != manifest.end()) {
      j.name = it->second.name;
      j.params = it->second.params;
      j.layout = it->second.layout;
    } else if (o.params.empty()) {
      throw Error(Errc::ParseError, o.anum + " is not in the manifest; pass --params");
    }
    if (!o.params.empty()) j.params = parse_params(o.params);
    if (!o.layout.empty()) j.layout = parse_layout(o.layout);
    jobs.push_back(j);
  }

  bool all_ok = true;
  Json arr = Json::array();
  for (const auto& job : jobs) {
    const OeisEntry e = fetch(job.anum, fo);
    const VerifyReport r = verify_against(job.params, e, job.layout, o.rows);
    all_ok = all_ok && (r.match || r.skipped);
    std::string status;
    if (r.skipped) {
      status = "SKIPPED: " + r.note;
    } else if (r.mismatch) {
      status = "MISMATCH at (" + std::to_string(r.mismatch->n) + "," + std::to_string(r.mismatch->k) +
               "): OEIS " + r.mismatch->expected.str() + ", triangle " + to_string(r.mismatch->got);
    } else if (!r.match) {
      status = "INCOMPLETE: " + r.note;
    } else {
      status = "MATCH through row " + std::to_string(o.rows);
    }
    if (json_out(o)) {
      Json j{{"anum", job.anum}, {"name", job.name}, {"params", params_to_json(job.params)},
             {"source", std::string(to_string(e.source))}, {"rows", o.rows},
             {"match", r.match}, {"skipped", r.skipped}, {"last_row", r.last_row}};
      if (r.mismatch) {
        j["mismatch"] = {{"n", r.mismatch->n}, {"k", r.mismatch->k},
                         {"expected", r.mismatch->expected.str()}, {"got", to_string(r.mismatch->got)}};
      }
      if (!r.note.empty()) j["note"] = r.note;
      arr.push_back(j);
    } else {
      out << job.anum;
      if (!job.name.empty()) out << " (" << job.name << ")";
      out << " " << to_string(job.params) << ": " << status << " [" << to_string(e.source) << "]\n";
    }
  }
  if (json_out(o)) out << (o.table1 ? arr : arr[0]).dump() << "\n";
  return all_ok ? 0 : 1;
}

int cmd_involute(const Options& o, std::ostream& out) {
  const ParamTuple p = parse_params(o.params);
  const InvolutionKind k = parse_involution(o.kind);
  const ParamTuple q = apply_involution(k, p);
  const ParamTuple qq = apply_involution(k, q);
  const bool triangle_ok = triangle(q, o.rows).same_values(transform(k, triangle(p, o.rows)));
  if (json_out(o)) {
    Json j{{"kind", std::string(to_string(k))}, {"params", params_to_json(p)},
           {"image", params_to_json(q)}, {"twice", params_to_json(qq)},
           {"twice_is_identity", qq == p}, {"triangle_identity", triangle_ok}, {"rows", o.rows}};
    out << j.dump() << "\n";
  } else {
    out << to_string(k) << ": " << to_string(p) << " -> " << to_string(q) << "\n";
    out << "applied twice: " << to_string(qq) << (qq == p ? " (identity)" : " (not the identity)") << "\n";
    out << "triangle identity through row " << o.rows << ": " << (triangle_ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return triangle_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Number triangles of the six-parameter recurrence: exact values, EGFs, residues, OEIS checks"};
  app.name("gkp");
  app.require_subcommand(1, 1);

  auto params = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--params", o.params, "a,b,c,a',b',c' as integers or p/q");
    if (required) opt->required();
  };
  auto format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto nonneg = CLI::NonNegativeNumber;

  auto* c_classify = app.add_subcommand("classify", "PDE type, Type I reduced parameters, special case");
  params(c_classify, true);
  format(c_classify);

  auto* c_triangle = app.add_subcommand("triangle", "rows 0..N of the triangle");
  params(c_triangle, true);
  c_triangle->add_option("--rows", o.rows, "last row N (default 10)")->check(nonneg);
  format(c_triangle);

  auto* c_rowpoly = app.add_subcommand("rowpoly", "row polynomial P_n, optionally evaluated");
  params(c_rowpoly, true);
  c_rowpoly->add_option("--n", o.n, "row index")->required()->check(nonneg);
  c_rowpoly->add_option("--x", o.x, "evaluation point p/q");
  format(c_rowpoly);

  auto* c_egf = app.add_subcommand("egf-check", "closed-form EGF against the triangle series");
  params(c_egf, true);
  c_egf->add_option("--x", o.x, "evaluation point x0 > 0")->required();
  c_egf->add_option("--order", o.order, "series order (default 10)")->check(nonneg);
  c_egf->add_option("--tol", o.tol, "relative tolerance for float results (default 1e-30)");
  c_egf->add_option("--case", o.kase, "force a special case instead of detection");
  c_egf->add_flag("--float", o.force_float, "evaluate the closed form in floating point");
  c_egf->add_option("--precision", o.precision, "decimal digits for float results (default 60)");
  format(c_egf);

  auto* c_res = app.add_subcommand("residue", "P_n(x0) from the residue formula");
  params(c_res, true);
  c_res->add_option("--n", o.n, "row index")->required()->check(nonneg);
  c_res->add_option("--x", o.x, "evaluation point in (0,1)")->required();
  c_res->add_option("--precision", o.precision, "decimal digits, at least 50 (default 60)");
  c_res->add_option("--tol", o.tol, "relative tolerance against the exact value (default 1e-30)");
  c_res->add_flag("--alt", o.alt, "use the Q0 alternative form (Type I, r in Z_0)");
  format(c_res);

  auto* c_deg = app.add_subcommand("degeneracy", "degenerate family and its closed form");
  params(c_deg, true);
  c_deg->add_option("--rows", o.rows, "rows to check the closed form on (default 10)")->check(nonneg);
  format(c_deg);

  auto* c_id = app.add_subcommand("identify", "parameter family reproducing a triangle prefix");
  params(c_id, false);
  c_id->add_option("--input", o.input, "triangle JSON file");
  c_id->add_option("--rows", o.rows, "rows generated from --params (default 6)");
  format(c_id);

  auto* c_oeis = app.add_subcommand("oeis-verify", "compare the triangle with an OEIS b-file");
  params(c_oeis, false);
  c_oeis->add_option("--anum", o.anum, "A-number, e.g. A008292");
  c_oeis->add_option("--rows", o.rows, "last row to compare (default 10)")->check(nonneg);
  c_oeis->add_flag("--offline", o.offline, "use fixtures and cache only");
  c_oeis->add_flag("--table1", o.table1, "check every entry of the fixture manifest");
  c_oeis->add_option("--cache-dir", o.cache_dir, "cache directory (default $GKP_CACHE_DIR or ./.oeis-cache)");
  c_oeis->add_option("--fixtures", o.fixtures, "fixture directory with manifest.json");
  c_oeis->add_option("--base-url", o.base_url, "b-file server (default https://oeis.org)");
  c_oeis->add_option("--layout", o.layout, "row_offset,k_offset[,k_trim]");
  format(c_oeis);

  auto* c_inv = app.add_subcommand("involute", "apply a tabulated parameter map and check the triangle");
  params(c_inv, true);
  c_inv->add_option("--kind", o.kind, "star, signed-star, alt-k, alt-n-minus-k, alt-n")->required();
  c_inv->add_option("--rows", o.rows, "rows to check (default 8)")->check(nonneg);
  format(c_inv);

  bool rows_set = false;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    const auto* rows_opt = app.get_subcommands().front()->get_option_no_throw("--rows");
    rows_set = rows_opt != nullptr && rows_opt->count() > 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (!rows_set) {
      if (name == "identify") o.rows = 6;
      if (name == "involute") o.rows = 8;
    }
    if (name == "classify") return cmd_classify(o, out);
    if (name == "triangle") return cmd_triangle(o, out);
    if (name == "rowpoly") return cmd_rowpoly(o, out);
    if (name == "egf-check") return cmd_egf_check(o, out);
    if (name == "residue") return cmd_residue(o, out);
    if (name == "degeneracy") return cmd_degeneracy(o, out);
    if (name == "identify") return cmd_identify(o, out);
    if (name == "oeis-verify") return cmd_oeis_verify(o, out);
    if (name == "involute") return cmd_involute(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gkp::cli
