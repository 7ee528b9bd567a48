#include "gkp/json_io.hpp"

#include "gkp/error.hpp"

namespace gkp {

namespace {

Rational rational_from_json(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(Errc::ParseError, "expected a rational string, got " + v.dump());
}

}  // namespace

Json rationals_to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json params_to_json(const ParamTuple& p) {
  const auto a = p.as_array();
  return rationals_to_json({a.begin(), a.end()});
}

ParamTuple params_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 6) throw Error(Errc::ParseError, "params must be a 6-element array");
  std::array<Rational, 6> v;
  for (std::size_t i = 0; i < 6; ++i) v[i] = rational_from_json(j[i]);
  return ParamTuple::from_array(v);
}

Json triangle_to_json(const Triangle& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows()) rows.push_back(rationals_to_json(r));
  return Json{{"params", params_to_json(t.params())}, {"rows", rows}};
}

Triangle triangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows")) throw Error(Errc::ParseError, "triangle JSON needs \"rows\"");
  ParamTuple p;
  if (j.contains("params")) p = params_from_json(j.at("params"));
  std::vector<Triangle::Row> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_array()) throw Error(Errc::ParseError, "each row must be an array");
    Triangle::Row row;
    for (const auto& v : r) row.push_back(rational_from_json(v));
    rows.push_back(std::move(row));
  }
  return Triangle(p, std::move(rows));
}

Json poly_to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Json degclass_to_json(const DegClass& c) {
  Json j{{"class", std::string(to_string(c.tag))}};
  Json inv = Json::object();
  switch (c.tag) {
    case DegTag::BinomialScaled:
      inv = {{"alpha", to_string(c.alpha)}, {"G", to_string(c.G)}, {"H", to_string(c.H)}};
      break;
    case DegTag::DiagonalProduct:
      inv = {{"L", to_string(c.L)}, {"gamma_p", to_string(c.gamma_p)}};
      break;
    case DegTag::LeftColumn:
      inv = {{"M", to_string(c.M)}, {"alpha", to_string(c.alpha)}};
      break;
    default:
      break;
  }
  j["invariants"] = inv;
  return j;
}

Json family_to_json(const ParamFamily& f) {
  Json basis = Json::array();
  for (const auto& v : f.nullspace_basis) basis.push_back(rationals_to_json({v.begin(), v.end()}));
  return Json{{"particular", params_to_json(f.particular)}, {"nullspace_basis", basis}, {"dim", f.dim}};
}

}  // namespace gkp
