#pragma once

#include <json.hpp>
#include <string>

#include "eqdeg/bifurcation.hpp"
#include "eqdeg/spectral.hpp"

namespace eqdeg {

using Json = nlohmann::ordered_json;

// 12 significant digits, so reports do not depend on the last ulp.
double round12(double x);

// [{"name": ..., "coefficient": ...}] in canonical class order.
Json element_json(const BurnsideRing& ring, const BurnsideElement& a);
BurnsideElement element_from_json(const BurnsideRing& ring, const Json& j);

Json group_info_json(const Problem& p);
Json basic_degrees_json(const Problem& p);
Json burnside_mul_json(const Problem& p, const std::string& lhs, const std::string& rhs);
Json existence_json(const Problem& p, const DegreeReport& r);
Json bifurcation_json(const Problem& p, const BifurcationReport& r);

// Aligned text rendering of any of the documents above (dispatch on "verb").
std::string render_text(const Json& doc);

}  // namespace eqdeg
