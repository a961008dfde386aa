#pragma once

#include <json.hpp>
#include <string>

#include "copath/criteria.hpp"
#include "copath/shape.hpp"

namespace copath {

nlohmann::ordered_json quiver_to_json(const Quiver& q);
nlohmann::ordered_json report_to_json(const Report& report);
std::string report_to_text(const Report& report);

/// DOT digraph of the quiver with multiplicity labels; in forbid mode the
/// graph label lists the forbidden factors.
std::string to_dot(const MonomialShape& shape);

}  // namespace copath
