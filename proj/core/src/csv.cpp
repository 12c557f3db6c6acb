#include "upconv/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "upconv/errors.hpp"

namespace upconv {

namespace {

bool parse_number(const std::string& text, double& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) {
    return false;
  }
  while (*end == ' ' || *end == '\t' || *end == '\r') {
    ++end;
  }
  return *end == '\0';
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  if (header.empty()) {
    throw ValidationError("CSV header must not be empty");
  }
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw ValidationError("CSV row width does not match the header");
    }
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::vector<std::array<double, 2>> read_two_column_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path.string());
  }
  std::vector<std::array<double, 2>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty()) {
      continue;
    }
    const auto comma = stripped.find(',');
    if (comma == std::string::npos) {
      std::ostringstream msg;
      msg << path.string() << ":" << line_number << ": expected two comma-separated columns";
      throw ValidationError(msg.str());
    }
    const std::string left = trim(stripped.substr(0, comma));
    const std::string right = trim(stripped.substr(comma + 1));
    double a = 0.0;
    double b = 0.0;
    if (!parse_number(left, a) || !parse_number(right, b)) {
      if (line_number == 1 && rows.empty()) {
        continue;  // header line
      }
      std::ostringstream msg;
      msg << path.string() << ":" << line_number << ": not a numeric row: " << stripped;
      throw ValidationError(msg.str());
    }
    rows.push_back({a, b});
  }
  return rows;
}

}  // namespace upconv
