#pragma once

#include "ordlab/affine.hpp"
#include "ordlab/group.hpp"
#include "ordlab/pl_homeo.hpp"
#include "ordlab/search.hpp"

#include <json.hpp>

namespace ordlab {

// All scalars travel as exact strings: rationals "p/q", dyadics "m*2^e".

nlohmann::ordered_json pl_to_json(const PLHomeo& f);
PLHomeo pl_from_json(const nlohmann::json& j);

nlohmann::ordered_json affine_to_json(const AffineMap& f);
AffineMap affine_from_json(const nlohmann::json& j);

nlohmann::ordered_json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j);

SearchParams params_from_json(const nlohmann::json& j);
nlohmann::ordered_json params_to_json(const SearchParams& p);

} // namespace ordlab
