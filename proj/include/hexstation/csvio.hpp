#pragma once

#include <string>
#include <vector>

namespace hexstation {

// Shortest round-trip decimal form of a double ("nan" for NaN). Locale-free
// and stable, which keeps CSV/JSON outputs byte-identical across runs.
std::string format_double(double v);

// Fixed-point form with the given number of decimals.
std::string format_fixed(double v, int decimals);

// Minimal RFC-4180-ish CSV reader: handles quoted fields, commas and embedded
// quotes; one record per line (no embedded newlines).
std::vector<std::string> split_csv_line(const std::string& line);

std::string csv_escape(const std::string& field);

// Reads a whole file; throws io_error when missing/unreadable.
std::string read_file(const std::string& path);

// Writes atomically (temp file + rename).
void write_file(const std::string& path, const std::string& content);

}  // namespace hexstation
