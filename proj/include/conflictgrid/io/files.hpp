#pragma once

#include <string>

namespace conflictgrid::io {

// Whole-file read/write. Throws IoError with the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace conflictgrid::io
