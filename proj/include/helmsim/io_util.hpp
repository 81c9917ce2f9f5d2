#pragma once

#include <string>
#include <vector>

namespace helmsim {

/// Format with 9 significant digits (the fixed precision of every
/// floating-point output file).
std::string fmt_g9(double v);

/// Round a value to 9 significant decimal digits.
double round_sig9(double v);

/// Parse "YYYY-MM-DDTHH:MM:SS[.fff][Z]" to seconds since the Unix epoch.
double parse_iso8601(const std::string& s);

/// Inverse of parse_iso8601, millisecond resolution, trailing Z.
std::string format_iso8601(double epoch_seconds);

/// Split one CSV line on commas, trimming surrounding whitespace.
std::vector<std::string> split_csv(const std::string& line);

/// Expand a filename pattern with '*' / '?' wildcards in its last
/// component. A pattern without wildcards returns itself if it exists.
std::vector<std::string> glob_files(const std::string& pattern);

std::string read_file(const std::string& path);

}  // namespace helmsim
