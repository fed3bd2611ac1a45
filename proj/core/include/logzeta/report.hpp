#pragma once

// Serialization of verification records. Numbers are written as decimal
// strings with a fixed number of significant digits, never as doubles.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logzeta/verify.hpp"

namespace logzeta::report {

enum class Format { json, csv, text };

/// Throws UsageError for anything but "json", "csv" or "text".
Format parse_format(std::string_view name);
std::string_view to_string(Format format);

inline constexpr int kSchemaVersion = 1;

struct ReportConfig {
  /// Echoed verbatim into the "config" block, in this order.
  std::vector<std::pair<std::string, std::string>> entries;
  /// Significant digits for values; deltas, bounds and tolerances use kBoundDigits.
  int digits = 40;
};

inline constexpr int kBoundDigits = 6;

/// Digits that a working precision of `bits` can honestly carry.
int digits_for_bits(unsigned bits);

/// "re" for real values, otherwise "re+imi" / "re-imi".
std::string format_complex(const mp::Complex& value, int digits);

std::string emit(const std::vector<verify::VerificationRecord>& records, const ReportConfig& config, Format format);

/// JSON Schema (draft 2020-12) of the JSON report.
std::string report_schema();

/// Writes `content` to `path`; throws IoError naming the path on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace logzeta::report
