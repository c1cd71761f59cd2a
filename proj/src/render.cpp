#include "continuum/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace continuum {

namespace {

std::string joined(const std::vector<std::string>& names, const char* sep) {
  if (names.empty()) return kEmptySetSentinel;
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += sep;
    out += names[i];
  }
  return out;
}

std::string markdown_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Legend legend(const ConceptLattice& lattice) {
  Legend out;
  const auto& ctx = lattice.context();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& c = lattice.concept_at(i);
    out.rows.push_back({lattice.id(i), ctx.object_names(c.extent), ctx.attribute_names(c.intent)});
  }
  return out;
}

std::string legend_markdown(const Legend& legend) {
  std::ostringstream out;
  out << "| ID | Objects | Attributes |\n";
  out << "|----|---------|------------|\n";
  for (const auto& row : legend.rows) {
    out << "| " << row.id << " | " << markdown_cell(joined(row.objects, ", ")) << " | "
        << markdown_cell(joined(row.attributes, ", ")) << " |\n";
  }
  return out.str();
}

std::string legend_csv(const Legend& legend) {
  std::ostringstream out;
  out << "id,objects,attributes\n";
  for (const auto& row : legend.rows) {
    out << csv_field(row.id) << ',' << csv_field(joined(row.objects, "; ")) << ','
        << csv_field(joined(row.attributes, "; ")) << '\n';
  }
  return out.str();
}

std::vector<std::size_t> assign_layers(const ConceptLattice& lattice) {
  std::vector<std::size_t> layer(lattice.size(), 0);
  // Concepts are stored with extents ascending, so walking backwards visits
  // every upper neighbour before its lower neighbours.
  for (std::size_t i = lattice.size(); i-- > 0;) {
    for (auto upper : lattice.upper_covers(i)) {
      layer[i] = std::max(layer[i], layer[upper] + 1);
    }
  }
  return layer;
}

std::string to_dot(const ConceptLattice& lattice, DotLabels labels) {
  const auto& ctx = lattice.context();
  const auto layers = assign_layers(lattice);
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::string label = lattice.id(i);
    if (labels == DotLabels::IdAndIntent) {
      label += "\n" + joined(ctx.attribute_names(lattice.concept_at(i).intent), ", ");
    }
    out << "  " << lattice.id(i) << " [label=" << dot_string(label) << "];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> by_layer;
  for (std::size_t i = 0; i < lattice.size(); ++i) by_layer[layers[i]].push_back(i);
  for (const auto& [_, members] : by_layer) {
    out << "  { rank=same;";
    for (auto i : members) out << ' ' << lattice.id(i) << ';';
    out << " }\n";
  }
  for (auto [lower, upper] : lattice.covers()) {
    out << "  " << lattice.id(upper) << " -> " << lattice.id(lower) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace continuum
