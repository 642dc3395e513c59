#pragma once

#include <stdexcept>
#include <string>

namespace rna {

/// Raised by parse_edge_list on malformed input.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the exact solvers when the instance exceeds the configured
/// size guard.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rna
