#pragma once

#include <string>

#include "json.hpp"
#include "semidet/determinant.hpp"
#include "semidet/enumeration.hpp"

namespace semidet {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const OrderedSemigroup& os, const SmoothnessReport& r);
Json to_json(const CayleyTable& S, const Factorization& f);
Json to_json(const ConjectureReport& r);
Json to_json(const CayleyTable& S, const StructureConstants& sc);

/// Wraps a section under its analysis name with the schema version.
Json envelope(const std::string& section, Json body);

/// The * table as signed element sums, "." for zero. The corner cell reads "(S,*)".
std::string render_star_table_paper(const CayleyTable& S, const StructureConstants& star);
/// One line per nonzero product: "s * t = sum".
std::string render_star_table_plain(const CayleyTable& S, const StructureConstants& star);

/// Labelled element set, e.g. "{y, z, u}".
std::string render_set(const CayleyTable& S, const ElementSet& set);

}  // namespace semidet
