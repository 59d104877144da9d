#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "virstag/scalar.hpp"
#include "virstag/staggered.hpp"
#include "virstag/structure.hpp"

namespace virstag {

using json = nlohmann::ordered_json;

// Rationals are strings "p/q"; rational functions carry integer-string
// coefficient lists (constant term first) and a factored rendering.
json to_json(const Q& q);
json to_json(const RatFunc& f);
json to_json(const Scalar& s);
json to_json(const std::vector<Q>& v);
json to_json(const Structure& s);
json to_json(const StaggeredAnswer& a);

Q q_from_json(const json& j);

}  // namespace virstag
