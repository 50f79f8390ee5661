#pragma once

#include <stdexcept>
#include <string>

namespace conflictgrid {

// Bad input data: malformed files, out-of-range parameters, broken invariants.
// Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failures: missing files, unreadable/unwritable paths.
// Maps to CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conflictgrid
