#pragma once

#include "tilewave/geometry.hpp"

#include "json.hpp"

namespace tilewave::geometry {

// Region JSON schema "tilewave/region-v1": every coordinate is a
// [numerator, denominator] pair of decimal strings; no floats ever.
inline constexpr const char* kRegionSchema = "tilewave/region-v1";

nlohmann::ordered_json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::ordered_json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::ordered_json lattice_to_json(const Lattice2& g);
Lattice2 lattice_from_json(const nlohmann::json& j);

}  // namespace tilewave::geometry
