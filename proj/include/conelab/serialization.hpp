#pragma once

#include <complex>
#include <string>
#include <vector>

#include "conelab/cone.hpp"
#include "conelab/germ.hpp"
#include "conelab/inner_product.hpp"
#include "json.hpp"

namespace conelab {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings (plain integers are also accepted) so
// values survive interchange bit-exactly.
Rat rat_from_json(const Json& j, const std::string& field);
std::string rat_to_string(const Rat& r);

Json cone_to_json(const LatticeCone& c);
LatticeCone cone_from_json(const Json& j);

Json cone_element_to_json(const ConeElement& x);
ConeElement cone_element_from_json(const Json& j);

Json germ_to_json(const Germ& f);
Germ germ_from_json(const Json& j);

// {"dims": [k...], "gram": {"k": [[rationals]]}}
InnerProductForm gram_family_from_json(const Json& j);

// array of real numbers, one per coordinate
std::vector<std::complex<double>> point_from_json(const Json& j);

// parses a file, turning I/O and syntax problems into ValidationError
Json load_json_file(const std::string& path);

}  // namespace conelab
