#pragma once

#include <stdexcept>
#include <string>

namespace fpforge {

// Exit-code conventions used by the CLI: 2 = validation, 3 = resource
// exhaustion, 4 = failed precondition.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fpforge
