#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace stylo {

/// Whole-file read. Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file, then renames over `path`. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Strict parse of a full field; throws SchemaMismatch.
double parse_double(std::string_view text);

}  // namespace stylo
