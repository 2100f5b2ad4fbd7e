#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pathx {

// Shortest decimal string that round-trips to the same double (std::to_chars).
// Locale-independent, '.' decimal point.
std::string format_double(double v);

// Fixed-precision variant for plot coordinates.
std::string format_double(double v, int precision);

// Strict parse of a full token; throws InputError on trailing garbage.
double parse_double(std::string_view s);
long parse_long(std::string_view s);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a named column; throws InputError if absent.
    std::size_t column(std::string_view name) const;
};

// Minimal CSV: comma separator, no quoting (fields in this project never
// contain commas), trailing newline, UTF-8.
CsvTable read_csv(const std::filesystem::path& path);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Whole-file read/write helpers.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::vector<unsigned char> read_binary_file(const std::filesystem::path& path);

}  // namespace pathx
