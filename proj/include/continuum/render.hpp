#pragma once

#include "continuum/fca.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace continuum {

inline constexpr const char* kEmptySetSentinel = "---";

struct LegendRow {
  std::string id;
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
};

struct Legend {
  std::vector<LegendRow> rows;
};

/// One row per concept in canonical order; names in declaration order.
Legend legend(const ConceptLattice& lattice);

/// Markdown table legend (ID | Objects | Attributes),
/// values ", "-joined, empty sets as "---".
std::string legend_markdown(const Legend& legend);
/// CSV with header `id,objects,attributes`, values "; "-joined.
std::string legend_csv(const Legend& legend);

/// Layer of each concept: longest cover-path distance from the top.
std::vector<std::size_t> assign_layers(const ConceptLattice& lattice);

enum class DotLabels { IdOnly, IdAndIntent };

std::string to_dot(const ConceptLattice& lattice, DotLabels labels = DotLabels::IdOnly);

}  // namespace continuum
