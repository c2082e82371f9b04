#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dds::io {

// Whole-file read; throws IoError if the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file then renames, so readers never see a torn file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

// Minimal CSV support: comma separator, no quoting (sequence and numeric data
// never contain commas). Keeps row order.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a column, or -1.
    int column(const std::string& name) const;
};

Csv read_csv(const std::filesystem::path& path);
Csv parse_csv(const std::string& text, const std::string& origin);
void write_csv(const std::filesystem::path& path, const Csv& csv);

// Splits a line on a separator without any unescaping.
std::vector<std::string> split(const std::string& line, char sep);

std::string trim(const std::string& s);

}  // namespace dds::io
