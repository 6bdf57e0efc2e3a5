#pragma once

#include <filesystem>

#include "effindex/series.hpp"

namespace effindex {

// Reads a price CSV: header row with `date` (ISO-8601) and `close` (decimal)
// columns in any order, extra columns ignored, rows sorted on load. The
// ticker is the file stem. Malformed rows are reported with their line
// number.
PriceSeries read_price_csv(const std::filesystem::path& file);

// Writes the ingestion-format CSV (`date,close` header).
void write_price_csv(const std::filesystem::path& file,
                     const PriceSeries& prices);

// Shortest round-trip decimal formatting; used for every number the tool
// emits so outputs are byte-stable.
std::string format_double(double value);

}  // namespace effindex
