#pragma once

#include "continuum/bitset.hpp"
#include "continuum/dimension.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace continuum {

/// Trim, then collapse internal whitespace runs to a single space. Case is
/// preserved.
std::string normalize_name(std::string_view raw);

/// Binary objects x attributes table tagged with a dimension.
///
/// Instances are immutable values. The constructor normalizes every name
/// and enforces the structural invariants (unique names, rectangular
/// incidence), so every live FormalContext is valid for all operations.
/// Declaration order of objects and attributes is preserved; it fixes the
/// lectic order used by concept enumeration.
class FormalContext {
 public:
  FormalContext();

  /// `incidence[g][m]` is true iff object g has attribute m.
  /// Throws Error with code duplicate-object, duplicate-attribute,
  /// empty-name or shape-mismatch.
  FormalContext(Dimension dimension, std::vector<std::string> objects,
                std::vector<std::string> attributes,
                const std::vector<std::vector<bool>>& incidence);

  /// Builds a context from per-object feature lists. Attributes are declared
  /// in first-appearance order unless `attribute_order` is given, in which
  /// case every feature must appear there.
  static FormalContext from_rows(
      Dimension dimension, std::vector<std::string> objects,
      const std::vector<std::vector<std::string>>& rows,
      std::optional<std::vector<std::string>> attribute_order = std::nullopt);

  Dimension dimension() const noexcept { return dimension_; }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }

  bool incident(std::size_t object, std::size_t attribute) const;

  /// Attribute set of one object.
  const IndexSet& row(std::size_t object) const { return rows_.at(object); }
  /// Object set of one attribute.
  const IndexSet& column(std::size_t attribute) const { return columns_.at(attribute); }

  std::optional<std::size_t> find_object(std::string_view name) const;
  std::optional<std::size_t> find_attribute(std::string_view name) const;

  /// Name lookups throwing Error{"unknown-object"} / {"unknown-attribute"}.
  IndexSet object_set(std::span<const std::string> names) const;
  IndexSet attribute_set(std::span<const std::string> names) const;

  /// Names of the set members, in declaration order.
  std::vector<std::string> object_names(const IndexSet& s) const;
  std::vector<std::string> attribute_names(const IndexSet& s) const;

  IndexSet all_objects() const { return IndexSet(objects_.size()).set(); }
  IndexSet all_attributes() const { return IndexSet(attributes_.size()).set(); }
  IndexSet no_objects() const { return IndexSet(objects_.size()); }
  IndexSet no_attributes() const { return IndexSet(attributes_.size()); }

  FormalContext with_dimension(Dimension d) const;
  FormalContext with_incidence(std::size_t object, std::size_t attribute,
                               bool value) const;
  /// Same context with attributes reordered: position i of the result holds
  /// attribute `order[i]` of this context.
  FormalContext with_attribute_order(std::span<const std::size_t> order) const;

  /// Structural equality: dimension, both name lists (order included) and
  /// incidence.
  friend bool operator==(const FormalContext& a, const FormalContext& b);

 private:
  Dimension dimension_;
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<IndexSet> rows_;
  std::vector<IndexSet> columns_;
};

struct Diagnostic {
  std::string code;
  std::string message;
  std::optional<std::size_t> line;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const noexcept { return errors.empty(); }
  bool has_warning(std::string_view code, std::string_view subject) const;
};

/// Burmeister CXT. The dimension is not carried by the format.
FormalContext parse_cxt(std::string_view text,
                        Dimension dimension = Dimension::Combined);
std::string serialize_cxt(const FormalContext& ctx);

/// JSON carrier: {"dimension", "objects", "attributes", "incidence"}.
FormalContext parse_json_context(std::string_view text);
std::string serialize_json_context(const FormalContext& ctx);

/// Warnings for a constructed context: vacuous-attribute (nobody has it),
/// universal-attribute (everybody has it) and empty-object (no features).
ValidationReport validate_context(const FormalContext& ctx);

enum class ContextFormat { Cxt, Json };

/// Parses and validates in one step. Parse failures land in `errors`
/// instead of being thrown.
ValidationReport validate_document(std::string_view text, ContextFormat format,
                                   Dimension dimension = Dimension::Combined);

/// Qualified attribute name used by merged contexts.
std::string qualify(Dimension d, std::string_view attribute);

/// Horizontal concatenation of contexts sharing one object list. Attributes
/// become "<dimension>:<name>".
/// Throws Error{"object-mismatch"} or Error{"attribute-collision"}.
FormalContext merge_contexts(std::span<const FormalContext> contexts);

}  // namespace continuum
