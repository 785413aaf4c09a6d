#pragma once

#include <ostream>
#include <string>

#include "f2orbit/census.hpp"
#include "f2orbit/classify.hpp"

namespace f2orbit {

/// {spec, n, kind, total_states, orbits: [{representative_hex, cardinality,
/// height_bits, type_label?}]}. Counts beyond 64 bits are written as decimal
/// strings; the output is a pure function of the census.
std::string census_to_json(const OrbitCensus& census);
/// Header row plus one row per orbit, same columns as the JSON orbits.
std::string census_to_csv(const OrbitCensus& census);
/// Aligned plain-text table for terminals.
std::string census_to_table(const OrbitCensus& census);

/// Parses census_to_json output back into a census (round trip).
OrbitCensus census_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);

}  // namespace f2orbit
