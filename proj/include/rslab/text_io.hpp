#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace rslab {

/// 17 significant digits ("%.17g"); throws NumericError for NaN or infinity.
std::string format_double(double x);

/// Writes through a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file. Throws Error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

} // namespace rslab
