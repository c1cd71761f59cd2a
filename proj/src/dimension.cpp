#include "continuum/dimension.hpp"

#include "continuum/error.hpp"

#include <string>

namespace continuum {

std::string_view to_string(Dimension d) noexcept {
  switch (d) {
    case Dimension::SemanticProperty: return "semantic-property";
    case Dimension::SemanticAffordance: return "semantic-affordance";
    case Dimension::PragmaticProperty: return "pragmatic-property";
    case Dimension::PragmaticAffordance: return "pragmatic-affordance";
    case Dimension::Combined: return "combined";
  }
  return "combined";
}

std::optional<Dimension> parse_dimension(std::string_view tag) noexcept {
  for (auto d : {Dimension::SemanticProperty, Dimension::SemanticAffordance,
                 Dimension::PragmaticProperty, Dimension::PragmaticAffordance,
                 Dimension::Combined}) {
    if (to_string(d) == tag) return d;
  }
  return std::nullopt;
}

Dimension require_dimension(std::string_view tag) {
  if (auto d = parse_dimension(tag)) return *d;
  throw Error("unknown-dimension", "unknown dimension tag '" + std::string(tag) + "'");
}

}  // namespace continuum
