#include "continuum/error.hpp"

#include <utility>

namespace continuum {

namespace {

std::string format_what(const std::string& code, const std::string& message,
                        std::optional<std::size_t> line) {
  std::string out = code;
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(std::string code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_what(code, message, line)),
      code_(std::move(code)),
      line_(line) {}

}  // namespace continuum
