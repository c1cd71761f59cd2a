#include "continuum/registry.hpp"

#include "continuum/error.hpp"

#include <algorithm>
#include <utility>

namespace continuum {

namespace {

Error conflict(const std::string& name, Dimension existing, Dimension requested) {
  return Error("dimension-conflict", "feature '" + name + "' is registered as " +
                                         std::string(to_string(existing)) + ", not " +
                                         std::string(to_string(requested)));
}

}  // namespace

FeatureRegistry FeatureRegistry::from_contexts(std::span<const FormalContext> contexts) {
  FeatureRegistry registry;
  for (const auto& ctx : contexts) {
    if (ctx.dimension() == Dimension::Combined) {
      throw Error("invalid-dimension", "combined contexts cannot seed a feature registry");
    }
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      const auto& name = ctx.attributes()[m];
      if (const auto* existing = registry.find(name)) {
        if (existing->dimension != ctx.dimension()) {
          throw conflict(name, existing->dimension, ctx.dimension());
        }
        continue;
      }
      const auto first = ctx.column(m).find_first();
      registry.entries_.emplace(
          name, FeatureEntry{ctx.dimension(),
                             first == IndexSet::npos ? std::string() : ctx.objects()[first],
                             {}});
    }
  }
  return registry;
}

bool FeatureRegistry::contains(const std::string& name, Dimension d) const {
  const auto* e = find(name);
  return e != nullptr && e->dimension == d;
}

const FeatureEntry* FeatureRegistry::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

FeatureRegistry FeatureRegistry::with(std::string name, FeatureEntry entry) const {
  FeatureRegistry copy = *this;
  copy.entries_.insert_or_assign(std::move(name), std::move(entry));
  return copy;
}

RegistrationResult register_feature(const FeatureRegistry& registry, const std::string& name,
                                    Dimension dimension, std::span<const FormalContext> contexts,
                                    std::string introduced_by, std::string description) {
  if (dimension == Dimension::Combined) {
    throw Error("invalid-dimension", "features belong to one of the four dimensions");
  }
  const auto normalized = normalize_name(name);
  RetroCheckReport report{normalized, dimension, {}};
  if (const auto* existing = registry.find(normalized)) {
    if (existing->dimension != dimension) throw conflict(normalized, existing->dimension, dimension);
    return {registry, report};
  }
  for (const auto& ctx : contexts) {
    if (ctx.dimension() != dimension || ctx.find_attribute(normalized)) continue;
    for (const auto& g : ctx.objects()) {
      if (std::find(report.recheck.begin(), report.recheck.end(), g) == report.recheck.end()) {
        report.recheck.push_back(g);
      }
    }
  }
  auto updated = registry.with(normalized, FeatureEntry{dimension, std::move(introduced_by),
                                                        std::move(description)});
  return {std::move(updated), std::move(report)};
}

std::vector<FeatureFrequency> feature_frequencies(std::span<const FormalContext> contexts) {
  std::vector<FeatureFrequency> out;
  for (const auto& ctx : contexts) {
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
      out.push_back({ctx.dimension(), ctx.attributes()[m], ctx.column(m).count(),
                     ctx.object_count()});
    }
  }
  return out;
}

}  // namespace continuum
