#pragma once

#include "continuum/context.hpp"
#include "continuum/dimension.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace continuum {

struct FeatureEntry {
  Dimension dimension;
  std::string introduced_by;
  std::string description;

  friend bool operator==(const FeatureEntry&, const FeatureEntry&) = default;
};

/// Objects that need their incidence for a newly registered feature
/// re-examined.
struct RetroCheckReport {
  std::string feature;
  Dimension dimension = Dimension::Combined;
  std::vector<std::string> recheck;
};

/// Every known feature name mapped to the one dimension it belongs to.
class FeatureRegistry {
 public:
  FeatureRegistry() = default;

  /// Registers every attribute of every context; `introduced_by` is the first
  /// object (in context order) exhibiting it.
  /// Throws Error{"dimension-conflict"} if a name shows up in two dimensions.
  static FeatureRegistry from_contexts(std::span<const FormalContext> contexts);

  const std::map<std::string, FeatureEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool contains(const std::string& name) const { return entries_.contains(name); }
  bool contains(const std::string& name, Dimension d) const;
  const FeatureEntry* find(const std::string& name) const;

  FeatureRegistry with(std::string name, FeatureEntry entry) const;

 private:
  std::map<std::string, FeatureEntry> entries_;
};

struct RegistrationResult {
  FeatureRegistry registry;
  RetroCheckReport report;
};

/// Adds `name` under `dimension`. The report lists, in context order and
/// without duplicates, every object of a `dimension` context that does not
/// yet declare the feature as an attribute: nobody has assessed those
/// objects for it. Re-registering under the same dimension is a no-op with
/// an empty report.
/// Throws Error{"dimension-conflict"} when the name is registered under
/// another dimension, Error{"invalid-dimension"} for Combined.
RegistrationResult register_feature(const FeatureRegistry& registry,
                                    const std::string& name, Dimension dimension,
                                    std::span<const FormalContext> contexts,
                                    std::string introduced_by = {},
                                    std::string description = {});

struct FeatureFrequency {
  Dimension dimension;
  std::string name;
  std::size_t count;
  std::size_t out_of;
};

/// Per-feature object counts computed from incidence, in context order then
/// attribute order.
std::vector<FeatureFrequency> feature_frequencies(std::span<const FormalContext> contexts);

}  // namespace continuum
