#pragma once

#include <json.hpp>

#include "ptiles/padic.hpp"
#include "ptiles/tiling.hpp"

namespace ptiles {

// Readers are strict about shape (exact key set, integral numbers ->
// FormatError) but lenient about element order; values are validated by
// the type constructors themselves (DomainError / PrecisionError).
PointSet read_point_set(const nlohmann::json& j);
LevelSet read_level_set(const nlohmann::json& j);
CompactOpenSet read_compact_open(const nlohmann::json& j);

// Census rows carry no "p" of their own; the base comes from context.
CensusRecord read_census_record(const nlohmann::json& j, const PrimeBase& base, int level);

// Canonical encodings; field order is fixed so output is byte-stable.
nlohmann::ordered_json write_point_set(const PointSet& t);
nlohmann::ordered_json write_level_set(const LevelSet& omega);
nlohmann::ordered_json write_compact_open(const CompactOpenSet& s);
nlohmann::ordered_json write_census_record(const CensusRecord& record);

}  // namespace ptiles
