#pragma once

#include "json.hpp"
#include "singwb/poly.hpp"

namespace swb {

using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json complex_to_json(const ComplexF& z);
json poly_to_json(const MPoly& p);
MPoly poly_from_json(const json& j);

}  // namespace swb
