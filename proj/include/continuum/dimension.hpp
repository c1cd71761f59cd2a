#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace continuum {

/// The four characterisation dimensions (semantic/pragmatic crossed with
/// property/affordance) plus `Combined`, which only merge_contexts produces.
enum class Dimension {
  SemanticProperty,
  SemanticAffordance,
  PragmaticProperty,
  PragmaticAffordance,
  Combined,
};

inline constexpr std::array<Dimension, 4> kFeatureDimensions = {
    Dimension::SemanticProperty, Dimension::SemanticAffordance,
    Dimension::PragmaticProperty, Dimension::PragmaticAffordance};

std::string_view to_string(Dimension d) noexcept;

std::optional<Dimension> parse_dimension(std::string_view tag) noexcept;

/// Like parse_dimension but throws Error{"unknown-dimension"}.
Dimension require_dimension(std::string_view tag);

}  // namespace continuum
