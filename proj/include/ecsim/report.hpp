#pragma once

#include <filesystem>
#include <string>

#include "ecsim/scenarios.hpp"

namespace ecsim {

inline constexpr const char* kReportSchema = "ecsim.report/1";

std::string tool_version();

// %.16e: 17 significant digits, round-trips a double.
std::string format_number(double v);

// Header row plus one record per time-grid point.
std::string timeseries_csv(const RunReport& report);
// First row: "im\\re" then the re axis; each further row: im value then Q values.
std::string qgrid_csv(const PhaseSpaceGrid& grid);
// Pretty-printed JSON. Without wall clock the text depends only on config and seed.
std::string summary_json(const RunReport& report, bool with_wall_clock = true);

// Writes timeseries.csv, summary.json and (if present) qgrid.csv into dir, creating it.
void write_outputs(const RunReport& report, const std::filesystem::path& dir);

}  // namespace ecsim
