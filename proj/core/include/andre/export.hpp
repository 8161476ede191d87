#pragma once

#include <filesystem>
#include <string>

#include "andre/refine.hpp"

namespace andre::io {

/// Shortest round-trip decimal formatting (CSV cells and console output).
std::string format_double(double v);

std::string to_string(Ansatz a);
std::string to_string(RunStatus s);
std::string to_string(AttemptAction a);
std::string to_string(ReferenceKind k);

/// Writes summary.json (the full report), subdomains.csv, solution.csv and
/// boundaries.csv into the directory, creating it if needed. Throws
/// std::runtime_error naming the path on I/O failure.
void write_report(const RunReport& report, const std::filesystem::path& out_dir);

/// Aggregates as stored in a summary.json written by write_report.
RunAggregates read_summary_aggregates(const std::filesystem::path& summary_json);

}  // namespace andre::io
