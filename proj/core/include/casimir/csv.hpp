#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

/// Two numeric columns read from a headed CSV file.
struct TwoColumnTable {
  std::vector<double> first;
  std::vector<double> second;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Parses `<col1>,<col2>` followed by numeric rows. Throws ConfigError naming
/// `source` and the line for a missing/mismatched header or a malformed row.
TwoColumnTable parse_two_column_csv(std::istream& in, std::string_view col1,
                                    std::string_view col2, std::string_view source);
TwoColumnTable read_two_column_csv(const std::filesystem::path& path,
                                   std::string_view col1, std::string_view col2);

void write_two_column_csv(std::ostream& out, std::string_view col1,
                          std::string_view col2, std::span<const double> first,
                          std::span<const double> second);

}  // namespace casimir
