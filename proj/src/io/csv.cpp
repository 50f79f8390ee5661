#include "conflictgrid/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "conflictgrid/errors.hpp"

namespace conflictgrid::io {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

[[noreturn]] void fail_at(const std::string& file, std::size_t line, const std::string& message) {
  throw ValidationError(file + ":" + std::to_string(line) + ": " + message);
}

namespace {

[[noreturn]] void fail_field(const FieldRef& ref, const std::string& why) {
  fail_at(ref.file, ref.line, "field '" + std::string(ref.field) + "': " + why);
}

}  // namespace

double parse_double_field(const std::string& text, const FieldRef& ref) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end || text.empty()) {
    fail_field(ref, "'" + text + "' is not a number");
  }
  if (!std::isfinite(value)) fail_field(ref, "value must be finite");
  return value;
}

std::size_t parse_index_field(const std::string& text, const FieldRef& ref) {
  std::size_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end || text.empty()) {
    fail_field(ref, "'" + text + "' is not a nonnegative integer");
  }
  return value;
}

int parse_int_field(const std::string& text, const FieldRef& ref) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end || text.empty()) {
    fail_field(ref, "'" + text + "' is not an integer");
  }
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (ch != '\r') {
      current.push_back(ch);
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find('\n', start);
    if (pos == std::string::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
}

}  // namespace conflictgrid::io
