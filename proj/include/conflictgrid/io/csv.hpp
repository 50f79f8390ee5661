#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace conflictgrid::io {

// Shortest decimal representation that parses back to the same double.
// All writers use this so output bytes are stable.
std::string format_double(double value);

// Context carried into field parsers so every error can name file, line and
// field.
struct FieldRef {
  const std::string& file;
  std::size_t line;  // 1-based
  const char* field;
};

double parse_double_field(const std::string& text, const FieldRef& ref);
std::size_t parse_index_field(const std::string& text, const FieldRef& ref);
int parse_int_field(const std::string& text, const FieldRef& ref);

// Splits one CSV line on commas. The formats here never quote, so commas in
// values are not supported; a trailing '\r' is tolerated.
std::vector<std::string> split_fields(const std::string& line);

// Splits text into lines, dropping one trailing empty line.
std::vector<std::string> split_lines(const std::string& text);

[[noreturn]] void fail_at(const std::string& file, std::size_t line, const std::string& message);

}  // namespace conflictgrid::io
