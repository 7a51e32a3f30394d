#include "casimir/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "casimir/error.hpp"

namespace casimir {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ec == std::errc() ? ptr : buffer);
}

TwoColumnTable parse_two_column_csv(std::istream& in, std::string_view col1,
                                    std::string_view col2, std::string_view source) {
  const std::string expected = std::string(col1) + "," + std::string(col2);
  std::string line;
  if (!std::getline(in, line)) {
    throw ConfigError(std::string(source) + ": empty file, expected header '" + expected + "'");
  }
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const std::string_view header = trim(line);
  const auto comma = header.find(',');
  if (comma == std::string_view::npos || trim(header.substr(0, comma)) != col1 ||
      trim(header.substr(comma + 1)) != col2) {
    throw ConfigError(std::string(source) + ": missing header, expected '" + expected +
                      "' got '" + std::string(header) + "'");
  }
  TwoColumnTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto sep = row.find(',');
    double a = 0.0;
    double b = 0.0;
    if (sep == std::string_view::npos || !parse_double(row.substr(0, sep), a) ||
        !parse_double(row.substr(sep + 1), b)) {
      throw ConfigError(std::string(source) + ":" + std::to_string(line_no) +
                        ": malformed row '" + std::string(row) + "'");
    }
    table.first.push_back(a);
    table.second.push_back(b);
  }
  return table;
}

TwoColumnTable read_two_column_csv(const std::filesystem::path& path,
                                   std::string_view col1, std::string_view col2) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  return parse_two_column_csv(in, col1, col2, path.string());
}

void write_two_column_csv(std::ostream& out, std::string_view col1,
                          std::string_view col2, std::span<const double> first,
                          std::span<const double> second) {
  out << col1 << ',' << col2 << '\n';
  const std::size_t n = std::min(first.size(), second.size());
  std::string row;
  for (std::size_t i = 0; i < n; ++i) {
    row = format_double(first[i]);
    row += ',';
    row += format_double(second[i]);
    row += '\n';
    out << row;
  }
}

}  // namespace casimir
