#pragma once

#include <stdexcept>
#include <string>

namespace locc {

// Raised when an input violates a documented precondition (normalization,
// dimensions, parameter range). Callers at the CLI boundary map it to exit 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace locc
