#ifndef BSIMPLEX_CSV_HPP_
#define BSIMPLEX_CSV_HPP_

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bsimplex {

// "%.17g": enough digits to round-trip any double.
std::string format_double(double value);

// Joins already-formatted fields with commas and appends a newline.
std::string csv_row(std::initializer_list<std::string_view> fields);
std::string csv_row(const std::vector<std::string>& fields);

// Writes content to a sibling temporary file and renames it over path, so
// readers never observe a partially written file.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace bsimplex

#endif  // BSIMPLEX_CSV_HPP_
