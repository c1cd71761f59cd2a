#include "continuum/context.hpp"
#include "continuum/error.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <set>
#include <sstream>

namespace continuum {

namespace {

using nlohmann::json;

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Lines without terminators; trailing whitespace-only lines are dropped.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim_right(text.substr(start, end - start)));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error("malformed-header", "expected a decimal count, found '" + std::string(s) + "'",
                line);
  }
  return value;
}

void check_duplicate(std::set<std::string>& seen, const std::string& name, const char* code,
                     const char* what, std::size_t line) {
  if (name.empty()) throw Error("empty-name", std::string(what) + " name is empty", line);
  if (!seen.insert(name).second) {
    throw Error(code, std::string(what) + " '" + name + "' is declared twice", line);
  }
}

}  // namespace

FormalContext parse_cxt(std::string_view text, Dimension dimension) {
  const auto lines = split_lines(text);
  // 1-based access; nullopt past the end.
  auto at = [&](std::size_t n) -> std::optional<std::string_view> {
    if (n == 0 || n > lines.size()) return std::nullopt;
    return lines[n - 1];
  };

  if (at(1) != std::optional<std::string_view>("B")) {
    throw Error("malformed-header", "first line must be 'B'", 1);
  }
  if (!at(2) || !at(2)->empty()) {
    throw Error("malformed-header", "second line must be blank", 2);
  }
  if (!at(3)) throw Error("malformed-header", "missing object count", 3);
  const auto n_objects = parse_count(*at(3), 3);
  if (!at(4)) throw Error("malformed-header", "missing attribute count", 4);
  const auto n_attributes = parse_count(*at(4), 4);
  if (at(5) && !at(5)->empty()) {
    throw Error("malformed-header", "fifth line must be blank", 5);
  }

  const std::size_t first_object = 6;
  const std::size_t first_attribute = first_object + n_objects;
  const std::size_t first_row = first_attribute + n_attributes;
  const std::size_t last_line = first_row - 1 + n_objects;
  if (n_attributes > 0 && lines.size() > last_line) {
    throw Error("count-mismatch", "unexpected content after the last incidence row",
                last_line + 1);
  }
  if (n_attributes == 0) {
    // Zero-width rows are blank lines and may have been dropped as trailing
    // whitespace.
    for (std::size_t n = first_row; n <= lines.size(); ++n) {
      if (n >= first_row + n_objects || !lines[n - 1].empty()) {
        throw Error("count-mismatch", "unexpected content after the declared names", n);
      }
    }
  }

  auto require = [&](std::size_t n, const char* what) {
    auto line = at(n);
    if (!line) {
      throw Error("count-mismatch",
                  std::string("document ends before ") + what + " (header declares " +
                      std::to_string(n_objects) + " objects and " +
                      std::to_string(n_attributes) + " attributes)",
                  n);
    }
    return *line;
  };

  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::set<std::string> seen_objects;
  std::set<std::string> seen_attributes;
  for (std::size_t i = 0; i < n_objects; ++i) {
    const auto n = first_object + i;
    objects.push_back(normalize_name(require(n, "an object name")));
    check_duplicate(seen_objects, objects.back(), "duplicate-object", "object", n);
  }
  for (std::size_t i = 0; i < n_attributes; ++i) {
    const auto n = first_attribute + i;
    attributes.push_back(normalize_name(require(n, "an attribute name")));
    check_duplicate(seen_attributes, attributes.back(), "duplicate-attribute", "attribute", n);
  }

  std::vector<std::vector<bool>> incidence(n_objects, std::vector<bool>(n_attributes, false));
  if (n_attributes > 0) {
    for (std::size_t g = 0; g < n_objects; ++g) {
      const auto n = first_row + g;
      const auto row = require(n, "an incidence row");
      if (row.size() != n_attributes) {
        throw Error("row-length",
                    "row has " + std::to_string(row.size()) + " cells, expected " +
                        std::to_string(n_attributes),
                    n);
      }
      for (std::size_t m = 0; m < n_attributes; ++m) {
        if (row[m] == 'X') {
          incidence[g][m] = true;
        } else if (row[m] != '.') {
          throw Error("invalid-row-character",
                      std::string("row character '") + row[m] + "' is neither 'X' nor '.'", n);
        }
      }
    }
  }
  return FormalContext(dimension, std::move(objects), std::move(attributes), incidence);
}

std::string serialize_cxt(const FormalContext& ctx) {
  std::ostringstream out;
  out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
  for (const auto& g : ctx.objects()) out << g << '\n';
  for (const auto& m : ctx.attributes()) out << m << '\n';
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      out << (ctx.incident(g, m) ? 'X' : '.');
    }
    out << '\n';
  }
  return out.str();
}

FormalContext parse_json_context(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("invalid-json", e.what());
  }
  auto violation = [](const std::string& msg) { return Error("schema-violation", msg); };
  if (!doc.is_object()) throw violation("context document must be a JSON object");
  for (const char* key : {"dimension", "objects", "attributes", "incidence"}) {
    if (!doc.contains(key)) throw violation(std::string("missing field '") + key + "'");
  }
  if (!doc["dimension"].is_string()) throw violation("'dimension' must be a string");
  const auto dimension = require_dimension(doc["dimension"].get<std::string>());

  auto names = [&](const char* key) {
    const auto& arr = doc[key];
    if (!arr.is_array()) throw violation(std::string("'") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
      if (!v.is_string()) throw violation(std::string("'") + key + "' must hold strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  auto objects = names("objects");
  auto attributes = names("attributes");

  const auto& rows = doc["incidence"];
  if (!rows.is_array()) throw violation("'incidence' must be an array of rows");
  std::vector<std::vector<bool>> incidence;
  for (const auto& row : rows) {
    if (!row.is_array()) throw violation("each incidence row must be an array");
    auto& out = incidence.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_number_integer() || (cell.get<int>() != 0 && cell.get<int>() != 1)) {
        throw violation("incidence cells must be 0 or 1");
      }
      out.push_back(cell.get<int>() == 1);
    }
  }
  return FormalContext(dimension, std::move(objects), std::move(attributes), incidence);
}

std::string serialize_json_context(const FormalContext& ctx) {
  auto list = [](const std::vector<std::string>& names) {
    return json(names).dump();
  };
  std::ostringstream out;
  out << "{\n";
  out << "  \"dimension\": " << json(std::string(to_string(ctx.dimension()))).dump() << ",\n";
  out << "  \"objects\": " << list(ctx.objects()) << ",\n";
  out << "  \"attributes\": " << list(ctx.attributes()) << ",\n";
  out << "  \"incidence\": [";
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    out << (g == 0 ? "\n    [" : ",\n    [");
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      out << (m == 0 ? "" : ", ") << (ctx.incident(g, m) ? 1 : 0);
    }
    out << ']';
  }
  out << (ctx.object_count() == 0 ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

}  // namespace continuum
