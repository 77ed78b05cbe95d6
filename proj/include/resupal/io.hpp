#pragma once

#include <string>

#include "resupal/catalog.hpp"
#include "resupal/restricted.hpp"
#include "resupal/superalgebra.hpp"

namespace resupal {

// JSON algebra document; throws ParseError on malformed input.
AlgebraDef parse_algebra_json(const std::string& text);
// "catalog:NAME" or a path to a JSON file.
AlgebraDef load_algebra(const std::string& source);

Field field_for(const AlgebraDef& def, unsigned p);

// Brackets listed once per unordered pair; coefficients as signed integers or [c0, c1].
std::string algebra_to_json(const SuperAlgebra& L, const PMap* pmap = nullptr);

}  // namespace resupal
