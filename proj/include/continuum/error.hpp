#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace continuum {

/// Failure raised by any operation on malformed input. `code` is a stable
/// kebab-case identifier (e.g. "count-mismatch"); `line` is set when the
/// failure can be pinned to a 1-based line of a text document.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  const std::string& code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::string code_;
  std::optional<std::size_t> line_;
};

}  // namespace continuum
