#include "continuum/context.hpp"

#include "continuum/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <utility>

namespace continuum {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

void require_unique(const std::vector<std::string>& names, const char* code,
                    const char* what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) {
      throw Error("empty-name", std::string(what) + " name is empty after normalization");
    }
    if (!seen.insert(n).second) {
      throw Error(code, std::string(what) + " '" + n + "' is declared twice");
    }
  }
}

std::optional<std::size_t> find_in(const std::vector<std::string>& names,
                                   std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

std::string normalize_name(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

FormalContext::FormalContext() : dimension_(Dimension::Combined) {}

FormalContext::FormalContext(Dimension dimension, std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : dimension_(dimension), objects_(std::move(objects)), attributes_(std::move(attributes)) {
  for (auto& n : objects_) n = normalize_name(n);
  for (auto& n : attributes_) n = normalize_name(n);
  require_unique(objects_, "duplicate-object", "object");
  require_unique(attributes_, "duplicate-attribute", "attribute");

  if (incidence.size() != objects_.size()) {
    throw Error("shape-mismatch", "incidence has " + std::to_string(incidence.size()) +
                                      " rows for " + std::to_string(objects_.size()) +
                                      " objects");
  }
  rows_.assign(objects_.size(), IndexSet(attributes_.size()));
  columns_.assign(attributes_.size(), IndexSet(objects_.size()));
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    if (incidence[g].size() != attributes_.size()) {
      throw Error("shape-mismatch", "incidence row for '" + objects_[g] + "' has " +
                                        std::to_string(incidence[g].size()) + " cells for " +
                                        std::to_string(attributes_.size()) + " attributes");
    }
    for (std::size_t m = 0; m < attributes_.size(); ++m) {
      if (incidence[g][m]) {
        rows_[g].set(m);
        columns_[m].set(g);
      }
    }
  }
}

FormalContext FormalContext::from_rows(Dimension dimension, std::vector<std::string> objects,
                                       const std::vector<std::vector<std::string>>& rows,
                                       std::optional<std::vector<std::string>> attribute_order) {
  if (rows.size() != objects.size()) {
    throw Error("shape-mismatch", "feature rows do not match the object list");
  }
  std::vector<std::string> attributes;
  std::unordered_map<std::string, std::size_t> index;
  if (attribute_order) {
    for (const auto& a : *attribute_order) {
      auto name = normalize_name(a);
      index.emplace(name, attributes.size());
      attributes.push_back(std::move(name));
    }
  } else {
    for (const auto& row : rows) {
      for (const auto& a : row) {
        auto name = normalize_name(a);
        if (index.emplace(name, attributes.size()).second) attributes.push_back(std::move(name));
      }
    }
  }
  std::vector<std::vector<bool>> incidence(objects.size(),
                                           std::vector<bool>(attributes.size(), false));
  for (std::size_t g = 0; g < rows.size(); ++g) {
    for (const auto& a : rows[g]) {
      auto it = index.find(normalize_name(a));
      if (it == index.end()) {
        throw Error("unknown-attribute", "feature '" + a + "' is not in the attribute order");
      }
      incidence[g][it->second] = true;
    }
  }
  return FormalContext(dimension, std::move(objects), std::move(attributes), incidence);
}

bool FormalContext::incident(std::size_t object, std::size_t attribute) const {
  return rows_.at(object).test(attribute);
}

std::optional<std::size_t> FormalContext::find_object(std::string_view name) const {
  return find_in(objects_, name);
}

std::optional<std::size_t> FormalContext::find_attribute(std::string_view name) const {
  return find_in(attributes_, name);
}

IndexSet FormalContext::object_set(std::span<const std::string> names) const {
  IndexSet out(objects_.size());
  for (const auto& n : names) {
    auto i = find_object(normalize_name(n));
    if (!i) throw Error("unknown-object", "unknown object '" + n + "'");
    out.set(*i);
  }
  return out;
}

IndexSet FormalContext::attribute_set(std::span<const std::string> names) const {
  IndexSet out(attributes_.size());
  for (const auto& n : names) {
    auto i = find_attribute(normalize_name(n));
    if (!i) throw Error("unknown-attribute", "unknown attribute '" + n + "'");
    out.set(*i);
  }
  return out;
}

std::vector<std::string> FormalContext::object_names(const IndexSet& s) const {
  std::vector<std::string> out;
  for (auto i : indices_of(s)) out.push_back(objects_.at(i));
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const IndexSet& s) const {
  std::vector<std::string> out;
  for (auto i : indices_of(s)) out.push_back(attributes_.at(i));
  return out;
}

FormalContext FormalContext::with_dimension(Dimension d) const {
  FormalContext copy = *this;
  copy.dimension_ = d;
  return copy;
}

FormalContext FormalContext::with_incidence(std::size_t object, std::size_t attribute,
                                            bool value) const {
  FormalContext copy = *this;
  copy.rows_.at(object).set(attribute, value);
  copy.columns_.at(attribute).set(object, value);
  return copy;
}

FormalContext FormalContext::with_attribute_order(std::span<const std::size_t> order) const {
  if (order.size() != attributes_.size()) {
    throw Error("shape-mismatch", "attribute permutation has the wrong length");
  }
  std::vector<std::string> attributes;
  std::vector<std::vector<bool>> incidence(objects_.size());
  for (auto m : order) attributes.push_back(attributes_.at(m));
  for (std::size_t g = 0; g < objects_.size(); ++g) {
    for (auto m : order) incidence[g].push_back(rows_[g].test(m));
  }
  return FormalContext(dimension_, objects_, std::move(attributes), incidence);
}

bool operator==(const FormalContext& a, const FormalContext& b) {
  return a.dimension_ == b.dimension_ && a.objects_ == b.objects_ &&
         a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
}

bool ValidationReport::has_warning(std::string_view code, std::string_view subject) const {
  return std::any_of(warnings.begin(), warnings.end(), [&](const Diagnostic& d) {
    return d.code == code && d.message == subject;
  });
}

ValidationReport validate_context(const FormalContext& ctx) {
  ValidationReport report;
  if (ctx.object_count() > 0) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      auto n = ctx.column(m).count();
      if (n == 0) {
        report.warnings.push_back({"vacuous-attribute", ctx.attributes()[m], std::nullopt});
      } else if (n == ctx.object_count()) {
        report.warnings.push_back({"universal-attribute", ctx.attributes()[m], std::nullopt});
      }
    }
  }
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    if (ctx.row(g).none()) {
      report.warnings.push_back({"empty-object", ctx.objects()[g], std::nullopt});
    }
  }
  return report;
}

ValidationReport validate_document(std::string_view text, ContextFormat format,
                                   Dimension dimension) {
  try {
    auto ctx = format == ContextFormat::Cxt ? parse_cxt(text, dimension)
                                            : parse_json_context(text);
    return validate_context(ctx);
  } catch (const Error& e) {
    ValidationReport report;
    std::string what = e.what();
    auto colon = what.find(": ");
    report.errors.push_back(
        {e.code(), colon == std::string::npos ? what : what.substr(colon + 2), e.line()});
    return report;
  }
}

std::string qualify(Dimension d, std::string_view attribute) {
  std::string out(to_string(d));
  out += ':';
  out += attribute;
  return out;
}

FormalContext merge_contexts(std::span<const FormalContext> contexts) {
  if (contexts.empty()) return FormalContext();
  const auto& objects = contexts.front().objects();
  std::vector<std::string> attributes;
  std::set<std::string> seen;
  for (const auto& ctx : contexts) {
    if (ctx.objects() != objects) {
      throw Error("object-mismatch", "contexts for " + std::string(to_string(ctx.dimension())) +
                                         " and " +
                                         std::string(to_string(contexts.front().dimension())) +
                                         " do not share the same object list");
    }
    for (const auto& a : ctx.attributes()) {
      auto q = qualify(ctx.dimension(), a);
      if (!seen.insert(q).second) {
        throw Error("attribute-collision", "attribute '" + q + "' occurs in two inputs");
      }
      attributes.push_back(std::move(q));
    }
  }
  std::vector<std::vector<bool>> incidence(objects.size());
  for (std::size_t g = 0; g < objects.size(); ++g) {
    for (const auto& ctx : contexts) {
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        incidence[g].push_back(ctx.incident(g, m));
      }
    }
  }
  return FormalContext(Dimension::Combined, objects, std::move(attributes), incidence);
}

}  // namespace continuum
