#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace upconv {

// "%.9g" with the C locale: '.' decimal separator, 9 significant digits,
// byte-stable across runs and platforms.
std::string format_number(double value);

// Writes header + rows with '\n' line endings; every row must match the
// header width.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Reads a two-column numeric CSV, skipping an optional non-numeric header
// line and blank lines.
std::vector<std::array<double, 2>> read_two_column_csv(
    const std::filesystem::path& path);

}  // namespace upconv
