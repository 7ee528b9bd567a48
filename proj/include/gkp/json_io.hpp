#pragma once

#include "gkp/degeneracy.hpp"
#include "gkp/identify.hpp"
#include "gkp/params.hpp"
#include "gkp/poly.hpp"
#include "gkp/triangle.hpp"
#include "json.hpp"

namespace gkp {

using Json = nlohmann::ordered_json;

/// ["a","b","c","a'","b'","c'"] with exact "p/q" strings.
Json params_to_json(const ParamTuple& p);
ParamTuple params_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& v);

/// {"params": [...], "rows": [["1"], [...], ...]}
Json triangle_to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Json degclass_to_json(const DegClass& c);
Json family_to_json(const ParamFamily& f);

}  // namespace gkp
