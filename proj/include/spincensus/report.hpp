#pragma once

#include <string>

#include "spincensus/counting.hpp"

namespace spincensus {

enum class OutputFormat { table, json, csv };

// Serializes a census for output.  All three formats carry the same entry
// and skipped-surface data; the JSON layout is stable, so parsing and
// re-serializing reproduces it byte for byte.
std::string render_census(const CensusReport& r, OutputFormat f);

}  // namespace spincensus
